"""Turn s-expressions into a typed board expression tree.

The keyword table is closed: heads that are not board keywords raise
UnknownKeyword, and keywords of the wider board grammar that this package
does not build raise UnsupportedKeyword.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import ArityError, BoardError, ParamTypeError, UnknownKeyword, UnsupportedKeyword
from ..graph import SiteType
from ..shapes import DiagType, ShapeKind, ShapeSpec
from ..tilings import TilingKind
from .sexpr import Atom, KeyVal, SExpr, SList, parse

TILING_HEADS = ("square", "rectangle", "hex", "tri", "hexagon", "triangle", "tiling", "concentric", "brick")
SHAPE_HEADS = ("square", "rectangle", "hexagon", "triangle", "regular", "poly")
OPERATOR_HEADS = ("dual", "subdivide", "merge", "union", "intersect", "remove", "add", "hole", "keep",
                  "clip", "complete", "rotate", "scale", "shift", "skew", "trim", "renumber", "makeFaces")
KEYWORDS = frozenset(("board", "graph") + TILING_HEADS + SHAPE_HEADS + OPERATOR_HEADS)
UNSUPPORTED = frozenset((
    "spiral", "quadhex", "celtic", "repeat", "wedge", "layers", "recoordinate", "splitCrossings",
    "pyramidal", "limping", "Star", "Diamond", "Prism", "fractal", "recursive", "lattice", "projective",
))
_UNSUPPORTED_LOWER = {k.lower(): k for k in UNSUPPORTED}


@dataclass(frozen=True)
class TilingNode:
    kind: TilingKind
    size: tuple = ()
    shape: Optional[ShapeSpec] = None
    ring_counts: tuple = ()
    use_site: Optional[SiteType] = None
    diagonals: Optional[DiagType] = None
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class ShapeNode:
    spec: ShapeSpec
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class OperatorNode:
    op: str
    children: tuple = ()
    params: tuple = ()  # sorted (name, value) pairs
    span: tuple = field(default=None, compare=False)

    def param(self, name, default=None):
        return dict(self.params).get(name, default)


@dataclass(frozen=True)
class GraphNode:
    vertices: tuple
    edges: tuple
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class BoardNode:
    child: object
    use_site: Optional[SiteType] = None
    diagonals: Optional[DiagType] = None
    span: tuple = field(default=None, compare=False)


BoardExpr = object  # any of the node classes above


# ---------------------------------------------------------------------------
# argument helpers


class _Args:
    """Positional items and key:value pairs of one list node."""

    def __init__(self, node: SList, allowed_keys: tuple = ()):
        self.node = node
        self.head = node.items[0].value
        self.pos = []
        self.keys = {}
        for item in node.items[1:]:
            if isinstance(item, KeyVal):
                key = item.key
                if key.lower() in _UNSUPPORTED_LOWER:
                    raise UnsupportedKeyword(_UNSUPPORTED_LOWER[key.lower()], span=item.span)
                if key == "use" and "use" not in allowed_keys:
                    raise ParamTypeError(f"use: is only allowed on board or tiling expressions, not '{self.head}'",
                                         span=item.span)
                if key not in allowed_keys:
                    raise UnknownKeyword(f"{key}:", span=item.span)
                if key in self.keys:
                    raise ArityError(f"'{key}:' given twice", span=item.span)
                self.keys[key] = item
            else:
                self.pos.append(item)

    def arity(self, lo: int, hi: int | None = None, what: str = "argument"):
        hi = lo if hi is None else hi
        n = len(self.pos)
        if n < lo or (hi >= 0 and n > hi):
            want = str(lo) if lo == hi else (f"{lo}-{hi}" if hi >= 0 else f"at least {lo}")
            raise ArityError(f"'{self.head}' takes {want} {what}(s), got {n}", span=self.node.span)


def _check_symbol(atom: Atom):
    if atom.kind == "SYMBOL" and atom.value.lower() in _UNSUPPORTED_LOWER:
        raise UnsupportedKeyword(_UNSUPPORTED_LOWER[atom.value.lower()], span=atom.span)


def _int(node: SExpr, what: str = "integer") -> int:
    if isinstance(node, Atom):
        _check_symbol(node)
        if node.kind == "INT":
            return node.value
    raise ParamTypeError(f"expected {what}, got {_describe(node)}", span=node.span)


def _num(node: SExpr, what: str = "number") -> float:
    if isinstance(node, Atom):
        _check_symbol(node)
        if node.kind in ("INT", "REAL"):
            return node.value
    raise ParamTypeError(f"expected {what}, got {_describe(node)}", span=node.span)


def _symbol(node: SExpr, what: str = "name") -> str:
    if isinstance(node, Atom) and node.kind == "SYMBOL":
        _check_symbol(node)
        return node.value
    raise ParamTypeError(f"expected {what}, got {_describe(node)}", span=node.span)


def _describe(node: SExpr) -> str:
    if isinstance(node, Atom):
        return f"{node.kind.lower()} {node.text!r}"
    if isinstance(node, KeyVal):
        return f"'{node.key}:'"
    return "a {…} list" if node.brace else "an expression"


def _brace(node: SExpr, what: str) -> SList:
    if isinstance(node, SList) and node.brace:
        return node
    raise ParamTypeError(f"expected {what} in {{ }}, got {_describe(node)}", span=node.span)


def _points(node: SExpr) -> tuple:
    lst = _brace(node, "a point list")
    pts = []
    for item in lst.items:
        p = _brace(item, "a point {x y}")
        if len(p.items) != 2:
            raise ArityError(f"a point needs 2 coordinates, got {len(p.items)}", span=p.span)
        pts.append((_num(p.items[0], "coordinate"), _num(p.items[1], "coordinate")))
    return tuple(pts)


def _pairs(node: SExpr) -> tuple:
    lst = _brace(node, "an index-pair list")
    out = []
    for item in lst.items:
        p = _brace(item, "an index pair {a b}")
        if len(p.items) != 2:
            raise ArityError(f"an edge needs 2 vertex indices, got {len(p.items)}", span=p.span)
        out.append((_int(p.items[0], "vertex index"), _int(p.items[1], "vertex index")))
    return tuple(out)


def _ints(node: SExpr, what: str) -> tuple:
    lst = _brace(node, what)
    return tuple(_int(x, "index") for x in lst.items)


def _use(args: _Args):
    kv = args.keys.get("use")
    if kv is None:
        return None
    name = _symbol(kv.value, "a site type")
    try:
        return SiteType.parse(name)
    except ValueError:
        raise ParamTypeError(f"use: expects Vertex, Edge or Cell, got {name!r}", span=kv.value.span) from None


def _diagonals(args: _Args):
    kv = args.keys.get("diagonals")
    if kv is None:
        return None
    name = _symbol(kv.value, "a diagonal type")
    try:
        return DiagType.parse(name)
    except BoardError as exc:
        exc.span = kv.value.span
        raise


def _head_of(node: SExpr) -> str:
    if not isinstance(node, SList) or node.brace:
        raise ParamTypeError(f"expected a board expression, got {_describe(node)}", span=node.span)
    head = node.head
    if head is None:
        if not node.items:
            raise ArityError("empty expression", span=node.span)
        raise ParamTypeError(f"expression must start with a keyword, got {_describe(node.items[0])}",
                             span=node.items[0].span)
    if head in KEYWORDS:
        return head
    if head.lower() in _UNSUPPORTED_LOWER:
        raise UnsupportedKeyword(_UNSUPPORTED_LOWER[head.lower()], span=node.span)
    raise UnknownKeyword(head, span=node.span)


# ---------------------------------------------------------------------------
# shapes


def elaborate_shape(node: SExpr) -> ShapeNode:
    head = _head_of(node)
    if head not in SHAPE_HEADS:
        raise ParamTypeError(f"expected a shape, got '{head}'", span=node.span)
    args = _Args(node)
    if head == "poly":
        args.arity(1, what="point list")
        pts = _points(args.pos[0])
        return ShapeNode(_make_shape(ShapeKind.Poly, (), pts, node), node.span)
    if head == "rectangle":
        args.arity(2, what="dimension")
        dims = (_int(args.pos[0], "row count"), _int(args.pos[1], "column count"))
        return ShapeNode(_make_shape(ShapeKind.Rectangle, dims, (), node), node.span)
    if head == "regular":
        args.arity(2, what="argument")
        dims = (_int(args.pos[0], "side count"), _num(args.pos[1], "side length"))
        return ShapeNode(_make_shape(ShapeKind.RegularPolygon, dims, (), node), node.span)
    args.arity(1, what="dimension")
    kind = {"square": ShapeKind.Square, "hexagon": ShapeKind.Hexagon, "triangle": ShapeKind.Triangle}[head]
    return ShapeNode(_make_shape(kind, (_num(args.pos[0], "dimension"),), (), node), node.span)


def _make_shape(kind, params, points, node) -> ShapeSpec:
    try:
        return ShapeSpec(kind, tuple(params), tuple(points))
    except BoardError as exc:
        exc.span = exc.span or node.span
        raise


# ---------------------------------------------------------------------------
# graph expressions


def elaborate(source) -> BoardExpr:
    """Elaborate text or an already-parsed s-expression."""
    node = parse(source) if isinstance(source, str) else source
    return _graph(node)


def _graph(node: SExpr) -> BoardExpr:
    head = _head_of(node)
    if head == "board":
        return _board(node)
    if head == "graph":
        return _freeform(node)
    if head in TILING_HEADS:
        return _tiling(node, head)
    if head in ("regular", "poly"):
        return elaborate_shape(node)
    return _operator(node, head)


def _board(node: SList) -> BoardNode:
    args = _Args(node, ("use", "diagonals"))
    args.arity(1, what="board expression")
    child = _graph(args.pos[0])
    if isinstance(child, BoardNode):
        raise ParamTypeError("boards cannot be nested", span=args.pos[0].span)
    return BoardNode(child, _use(args), _diagonals(args), node.span)


def _freeform(node: SList) -> GraphNode:
    args = _Args(node, ("vertices", "edges"))
    args.arity(0, what="positional argument")
    if "vertices" not in args.keys:
        raise ArityError("graph needs vertices:{{x y} ...}", span=node.span)
    verts = _points(args.keys["vertices"].value)
    edges = _pairs(args.keys["edges"].value) if "edges" in args.keys else ()
    return GraphNode(verts, edges, node.span)


def _tiling(node: SList, head: str) -> TilingNode:
    args = _Args(node, ("use", "diagonals"))
    use, diag = _use(args), _diagonals(args)
    if head == "tiling":
        args.arity(2, what="argument")
        name = _symbol(args.pos[0], "a tiling name")
        try:
            kind = TilingKind.parse(name)
        except BoardError as exc:
            exc.span = args.pos[0].span
            raise
        if kind in (TilingKind.Concentric, TilingKind.Brick):
            raise ParamTypeError(f"use ({kind.value} ...) directly", span=args.pos[0].span)
        return _sized(kind, args.pos[1], use, diag, node)
    if head == "concentric":
        if len(args.pos) == 1 and isinstance(args.pos[0], SList) and args.pos[0].brace:
            counts = _ints(args.pos[0], "ring counts")
        else:
            args.arity(1, -1, what="ring count")
            counts = tuple(_int(x, "ring count") for x in args.pos)
        return TilingNode(TilingKind.Concentric, (), None, counts, use, diag, node.span)
    if head == "brick":
        args.arity(1, 2, what="dimension")
        dims = tuple(_int(x, "dimension") for x in args.pos)
        return TilingNode(TilingKind.Brick, dims, None, (), use, diag, node.span)
    if head == "rectangle":
        args.arity(2, what="dimension")
        dims = (_int(args.pos[0], "row count"), _int(args.pos[1], "column count"))
        return TilingNode(TilingKind.Square, dims, None, (), use, diag, node.span)
    kind = {"square": TilingKind.Square, "hex": TilingKind.Hex, "hexagon": TilingKind.Hex,
            "tri": TilingKind.Tri, "triangle": TilingKind.Tri}[head]
    args.arity(1, what="argument")
    if head in ("hexagon", "triangle") and not isinstance(args.pos[0], Atom):
        raise ParamTypeError(f"expected a dimension, got {_describe(args.pos[0])}", span=args.pos[0].span)
    return _sized(kind, args.pos[0], use, diag, node)


def _sized(kind, arg, use, diag, node) -> TilingNode:
    if isinstance(arg, Atom):
        return TilingNode(kind, (_int(arg, "size"),), None, (), use, diag, node.span)
    shape = elaborate_shape(arg)
    return TilingNode(kind, (), shape.spec, (), use, diag, node.span)


_SINGLE = ("dual", "complete", "trim", "renumber", "makeFaces")
_TRANSFORM_ARITY = {"rotate": (1, 1), "scale": (1, 2), "shift": (1, 2), "skew": (1, 2)}


def _operator(node: SList, head: str) -> OperatorNode:
    keys = {"subdivide": ("min",), "remove": ("cells", "edges", "vertices"),
            "add": ("vertices", "edges")}.get(head, ())
    args = _Args(node, keys)
    op = "merge" if head == "union" else head
    if head in _SINGLE:
        args.arity(1, what="board expression")
        return OperatorNode(op, (_graph(args.pos[0]),), (), node.span)
    if head == "subdivide":
        args.arity(1, what="board expression")
        params = ()
        if "min" in args.keys:
            m = _int(args.keys["min"].value, "minimum side count")
            if m < 1:
                raise ParamTypeError(f"min: must be >= 1, got {m}", span=args.keys["min"].value.span)
            params = (("min", m),)
        return OperatorNode(op, (_graph(args.pos[0]),), params, node.span)
    if head in ("merge", "union", "intersect"):
        items = args.pos
        if len(items) == 1 and isinstance(items[0], SList) and items[0].brace:
            items = list(items[0].items)
        if len(items) < 2:
            raise ArityError(f"'{head}' needs at least 2 boards, got {len(items)}", span=node.span)
        return OperatorNode(op, tuple(_graph(x) for x in items), (), node.span)
    if head == "remove":
        args.arity(1, what="board expression")
        if not args.keys:
            raise ArityError("remove needs cells:{…}, edges:{…} or vertices:{…}", span=node.span)
        params = tuple(sorted((k, _ints(kv.value, f"{k} indices")) for k, kv in args.keys.items()))
        return OperatorNode(op, (_graph(args.pos[0]),), params, node.span)
    if head == "add":
        args.arity(1, what="board expression")
        verts = _points(args.keys["vertices"].value) if "vertices" in args.keys else ()
        edges = _pairs(args.keys["edges"].value) if "edges" in args.keys else ()
        return OperatorNode(op, (_graph(args.pos[0]),), (("edges", edges), ("vertices", verts)), node.span)
    if head in ("hole", "keep", "clip"):
        args.arity(2, what="argument")
        child = _graph(args.pos[0])
        shape = elaborate_shape(args.pos[1])
        return OperatorNode(op, (child,), (("shape", shape.spec),), node.span)
    # affine transforms: one board plus numbers, in either order
    graphs = [x for x in args.pos if isinstance(x, SList) and not x.brace]
    nums = [x for x in args.pos if not (isinstance(x, SList) and not x.brace)]
    if len(graphs) != 1:
        raise ArityError(f"'{head}' takes exactly 1 board expression, got {len(graphs)}", span=node.span)
    lo, hi = _TRANSFORM_ARITY[head]
    if not lo <= len(nums) <= hi:
        want = str(lo) if lo == hi else f"{lo}-{hi}"
        raise ArityError(f"'{head}' takes {want} number(s), got {len(nums)}", span=node.span)
    values = tuple(_num(x) for x in nums)
    return OperatorNode(op, (_graph(graphs[0]),), (("values", values),), node.span)
