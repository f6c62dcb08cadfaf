"""Bottom-up evaluation of board expressions into analysed graphs."""

from __future__ import annotations

from functools import singledispatch

from .. import operators as ops
from .. import shapes, tilings
from ..errors import BoardError
from ..graph import BoardGraph, ElementId, SiteType, build_graph
from ..tilings import TilingKind, TilingSpec
from .elaborate import BoardNode, GraphNode, OperatorNode, ShapeNode, TilingNode, elaborate


def build(text: str) -> BoardGraph:
    """Parse, elaborate and evaluate a description in one go."""
    return evaluate(elaborate(text))


def evaluate(expr) -> BoardGraph:
    try:
        return _eval(expr)
    except BoardError as exc:
        if exc.span is None:
            exc.span = getattr(expr, "span", None)
        raise


def _child(node):
    """Evaluate a sub-expression, tagging span-less errors with its span."""
    try:
        return _eval(node)
    except BoardError as exc:
        if exc.span is None:
            exc.span = node.span
        raise


@singledispatch
def _eval(node) -> BoardGraph:
    raise TypeError(f"not a board expression: {node!r}")


@_eval.register
def _(node: BoardNode) -> BoardGraph:
    child = node.child
    if isinstance(child, TilingNode) and child.use_site is None and node.use_site is not None:
        # dimensions count vertices when the board plays on vertices or edges
        child = TilingNode(child.kind, child.size, child.shape, child.ring_counts,
                           node.use_site, child.diagonals, child.span)
    g = _child(child)
    if node.diagonals is not None:
        g = shapes.add_diagonal_edges(g, node.diagonals)
    site = node.use_site if node.use_site is not None else g.default_site
    return g.with_default_site(site).analyze()


@_eval.register
def _(node: TilingNode) -> BoardGraph:
    use = node.use_site if node.use_site is not None else SiteType.Cell
    if node.shape is not None:
        g = shapes.shaped_board(node.kind, node.shape)
    else:
        g = tilings.generate(TilingSpec(node.kind, node.size or (1,), use, node.ring_counts))
    if node.diagonals is not None:
        g = shapes.add_diagonal_edges(g, node.diagonals)
    return g.with_default_site(use)


@_eval.register
def _(node: ShapeNode) -> BoardGraph:
    return shapes.polygon_board(shapes.shape_to_polygon(node.spec))


@_eval.register
def _(node: GraphNode) -> BoardGraph:
    return build_graph(node.vertices, node.edges, meta={"tiling": "graph"})


def _tiling_of(g: BoardGraph):
    try:
        return TilingKind.parse(g.meta.get("tiling", ""))
    except BoardError:
        return None


@_eval.register
def _(node: OperatorNode) -> BoardGraph:
    kids = [_child(c) for c in node.children]
    op = node.op
    g = kids[0]
    if op == "dual":
        return ops.dual(g)
    if op == "subdivide":
        return ops.subdivide(g, node.param("min", 1))
    if op == "merge":
        for other in kids[1:]:
            g = ops.merge(g, other)
        return g
    if op == "intersect":
        for other in kids[1:]:
            g = ops.intersect(g, other)
        return g
    if op == "remove":
        els = []
        for key, st in (("vertices", SiteType.Vertex), ("edges", SiteType.Edge), ("cells", SiteType.Cell)):
            els.extend(ElementId(st, i) for i in node.param(key, ()))
        return ops.remove(g, els)
    if op == "add":
        return ops.add(g, node.param("vertices", ()), node.param("edges", ()))
    if op in ("hole", "keep", "clip"):
        region = shapes.shape_to_polygon(node.param("shape"), _tiling_of(g))
        return shapes.restrict(g, region, shapes.Mode(op))
    if op == "complete":
        return ops.complete(g)
    if op in ("rotate", "scale", "shift", "skew"):
        return ops.transform(g, op, node.param("values"))
    if op == "trim":
        return ops.trim(g)
    if op == "renumber":
        return ops.renumber(g)
    if op == "makeFaces":
        return ops.make_faces(g)
    raise BoardError(f"operator {op!r} has no evaluator")
