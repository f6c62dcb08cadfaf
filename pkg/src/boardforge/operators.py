"""Graph-to-graph board operators: dual, subdivide, merge, transforms and friends."""

from __future__ import annotations

import math
import warnings
from enum import Enum
from typing import Iterable, Sequence

from . import geometry as geo
from .errors import (EmptyResultWarning, InvalidElement, NonPlanarInput, NonPlanarOverlap,
                     SingularTransform, TooFewCells, TooManyVertices)
from .graph import (BoardGraph, ElementId, SiteType, assemble, build_graph, infer_faces,
                    merge_points, renumber)

COMPLETE_LIMIT = 64


class TransformKind(Enum):
    Rotate = "rotate"
    Scale = "scale"
    Shift = "shift"
    Skew = "skew"


def _warn_empty(meta, what: str):
    warnings.warn(f"{what} left a board with no cells", EmptyResultWarning, stacklevel=3)
    meta = dict(meta)
    meta["warnings"] = tuple(sorted(set(meta.get("warnings", ())) | {"EmptyResult"}))
    return meta


def _plain_meta(meta) -> dict:
    """Metadata that survives a topology change (geometry-bound extras dropped)."""
    out = {k: v for k, v in meta.items() if k not in ("concentric", "warnings")}
    return out


def dual(graph: BoardGraph) -> BoardGraph:
    """Weak dual: one vertex per cell centroid, an edge per shared cell side."""
    if len(graph.cells) < 2:
        raise TooFewCells(f"dual needs at least 2 cells, board has {len(graph.cells)}")
    positions = [c.centroid for c in graph.cells]
    pairs = [e.cells for e in graph.edges if len(e.cells) == 2]
    meta = _plain_meta(graph.meta)
    meta["tiling"] = f"dual({graph.meta.get('tiling', 'graph')})"
    return build_graph(positions, pairs, default_site=graph.default_site, meta=meta)


def subdivide(graph: BoardGraph, min_sides: int = 1) -> BoardGraph:
    """Fan every cell with at least ``min_sides`` sides into triangles around its centroid."""
    if min_sides < 1:
        raise ValueError("min_sides must be >= 1")
    positions = list(graph.positions)
    pairs = [e.endpoints for e in graph.edges]
    for rec in graph.cells:
        if len(rec.vertices) >= min_sides:
            hub = len(positions)
            positions.append(rec.centroid)
            pairs.extend((hub, v) for v in rec.vertices)
    return build_graph(positions, pairs, default_site=graph.default_site,
                       meta=_plain_meta(graph.meta))


def _combined_meta(a: BoardGraph, b: BoardGraph) -> dict:
    ta, tb = a.meta.get("tiling"), b.meta.get("tiling")
    meta = _plain_meta(a.meta)
    if ta != tb:
        meta["tiling"] = "merged"
    return meta


def merge(a: BoardGraph, b: BoardGraph) -> BoardGraph:
    """Superpose two boards; coincident vertices and duplicate edges unify."""
    positions = list(a.positions) + list(b.positions)
    off = len(a.vertices)
    pairs = [e.endpoints for e in a.edges] + [(p + off, q + off) for p, q in (e.endpoints for e in b.edges)]
    try:
        return build_graph(positions, pairs, default_site=a.default_site, meta=_combined_meta(a, b))
    except NonPlanarInput as exc:
        raise NonPlanarOverlap(f"merged boards overlap: {exc.message}", pair=exc.pair) from None


def intersect(a: BoardGraph, b: BoardGraph) -> BoardGraph:
    """Vertices and edges present (geometrically) in both boards."""
    unique, index = merge_points(list(a.positions) + list(b.positions))
    off = len(a.vertices)
    in_a = set(index[:off])
    in_b = set(index[off:])
    keep_v = sorted(in_a & in_b)
    ea = {tuple(sorted((index[p], index[q]))) for p, q in (e.endpoints for e in a.edges)}
    eb = {tuple(sorted((index[p + off], index[q + off]))) for p, q in (e.endpoints for e in b.edges)}
    vmap = {v: i for i, v in enumerate(keep_v)}
    pairs = [(vmap[p], vmap[q]) for p, q in sorted(ea & eb)]
    meta = _combined_meta(a, b)
    g = build_graph([unique[v] for v in keep_v], pairs, default_site=a.default_site, meta=meta)
    if not g.cells:
        g = assemble(g.positions, [e.endpoints for e in g.edges], (),
                     default_site=g.default_site, meta=_warn_empty(meta, "intersect"))
    return g


def remove(graph: BoardGraph, elements: Iterable[ElementId]) -> BoardGraph:
    """Delete elements. Removing a cell keeps its sides; removing an edge
    destroys its cells; removing a vertex destroys its edges and cells."""
    gone_v, gone_e, gone_c = set(), set(), set()
    for el in elements:
        st, idx = graph.check_element(ElementId(*el))
        if st == SiteType.Cell:
            gone_c.add(idx)
        elif st == SiteType.Edge:
            gone_e.add(idx)
        else:
            gone_v.add(idx)
    for v in gone_v:
        gone_e.update(graph.vertices[v].edges)
    for e in gone_e:
        gone_c.update(graph.edges[e].cells)
    vmap = {}
    positions = []
    for v, rec in enumerate(graph.vertices):
        if v not in gone_v:
            vmap[v] = len(positions)
            positions.append(rec.position)
    pairs = [(vmap[a], vmap[b]) for i, (a, b) in enumerate(e.endpoints for e in graph.edges)
             if i not in gone_e]
    cycles = [[vmap[v] for v in rec.vertices] for c, rec in enumerate(graph.cells) if c not in gone_c]
    meta = dict(graph.meta)
    if graph.cells and not cycles:
        meta = _warn_empty(meta, "remove")
    return assemble(positions, pairs, cycles, default_site=graph.default_site, meta=meta)


def add(graph: BoardGraph, positions: Sequence = (), edge_pairs: Sequence = ()) -> BoardGraph:
    """Insert vertices and edges, then re-infer faces.

    Edge pairs index the existing vertices followed by the new ones.
    """
    allpos = list(graph.positions) + [tuple(map(float, p)) for p in positions]
    n = len(allpos)
    for a, b in edge_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidElement(f"added edge ({a}, {b}) references a missing vertex")
    pairs = [e.endpoints for e in graph.edges] + [tuple(p) for p in edge_pairs]
    return build_graph(allpos, pairs, default_site=graph.default_site, meta=_plain_meta(graph.meta))


def complete(graph: BoardGraph) -> BoardGraph:
    """Join every pair of vertices; faces come only from uncrossed regions."""
    n = len(graph.vertices)
    if n > COMPLETE_LIMIT:
        raise TooManyVertices(f"complete refuses boards with more than {COMPLETE_LIMIT} vertices ({n})")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return build_graph(graph.positions, pairs, allow_crossings=True,
                       default_site=graph.default_site, meta=_plain_meta(graph.meta))


def _affine(kind: TransformKind, params: Sequence):
    """(matrix, offset) for a transform; rotation angles are clockwise degrees."""
    p = [float(x) for x in params]
    if kind == TransformKind.Rotate:
        if len(p) != 1:
            raise ValueError("rotate takes one angle")
        t = -math.radians(p[0])
        c, s = math.cos(t), math.sin(t)
        return (c, -s, s, c), (0.0, 0.0)
    if kind == TransformKind.Scale:
        sx, sy = (p[0], p[0]) if len(p) == 1 else (p[0], p[1])
        if sx == 0.0 or sy == 0.0:
            raise SingularTransform(f"scale factors must be nonzero, got ({sx}, {sy})")
        return (sx, 0.0, 0.0, sy), (0.0, 0.0)
    if kind == TransformKind.Shift:
        dx, dy = (p[0], 0.0) if len(p) == 1 else (p[0], p[1])
        return (1.0, 0.0, 0.0, 1.0), (dx, dy)
    kx, ky = (p[0], 0.0) if len(p) == 1 else (p[0], p[1])
    if abs(1.0 - kx * ky) < 1e-12:
        raise SingularTransform(f"skew ({kx}, {ky}) collapses the plane")
    return (1.0, kx, ky, 1.0), (0.0, 0.0)


def transform(graph: BoardGraph, kind: TransformKind | str, params: Sequence) -> BoardGraph:
    """Apply an affine map to every vertex; element numbering is kept."""
    kind = TransformKind(kind)
    (m00, m01, m10, m11), (ox, oy) = _affine(kind, params)

    def f(p):
        return (m00 * p[0] + m01 * p[1] + ox, m10 * p[0] + m11 * p[1] + oy)

    positions = [f(p) for p in graph.positions]
    meta = dict(graph.meta)
    meta.pop("warnings", None)
    conc = meta.get("concentric")
    if conc is not None:
        conc = dict(conc)
        if kind == TransformKind.Rotate:
            conc["center"] = list(f(conc["center"]))
            conc["offset"] = conc["offset"] - math.radians(float(params[0])) * conc["orientation"]
            meta["concentric"] = conc
        elif kind == TransformKind.Shift:
            conc["center"] = list(f(conc["center"]))
            meta["concentric"] = conc
        else:
            meta.pop("concentric")
    if graph.meta.get("warnings"):
        meta["warnings"] = graph.meta["warnings"]
    return assemble(positions, [e.endpoints for e in graph.edges], [c.vertices for c in graph.cells],
                    default_site=graph.default_site, meta=meta, canonical=False)


def rotate(graph: BoardGraph, degrees: float) -> BoardGraph:
    return transform(graph, TransformKind.Rotate, [degrees])


def scale(graph: BoardGraph, sx: float, sy: float | None = None) -> BoardGraph:
    return transform(graph, TransformKind.Scale, [sx, sx if sy is None else sy])


def shift(graph: BoardGraph, dx: float, dy: float = 0.0) -> BoardGraph:
    return transform(graph, TransformKind.Shift, [dx, dy])


def skew(graph: BoardGraph, kx: float, ky: float = 0.0) -> BoardGraph:
    return transform(graph, TransformKind.Skew, [kx, ky])


def trim(graph: BoardGraph) -> BoardGraph:
    """Strip pendant vertices (degree <= 1) until none remain."""
    degree = [len(v.edges) for v in graph.vertices]
    alive_e = set(range(len(graph.edges)))
    alive_v = set(range(len(graph.vertices)))
    todo = [v for v in alive_v if degree[v] <= 1]
    while todo:
        v = todo.pop()
        if v not in alive_v:
            continue
        alive_v.discard(v)
        for e in graph.vertices[v].edges:
            if e in alive_e:
                alive_e.discard(e)
                a, b = graph.edges[e].endpoints
                w = b if a == v else a
                degree[w] -= 1
                if degree[w] <= 1 and w in alive_v:
                    todo.append(w)
    vmap = {v: i for i, v in enumerate(sorted(alive_v))}
    positions = [graph.vertices[v].position for v in sorted(alive_v)]
    pairs = [tuple(vmap[x] for x in graph.edges[e].endpoints) for e in sorted(alive_e)]
    cycles = [[vmap[v] for v in c.vertices] for c in graph.cells]
    return assemble(positions, pairs, cycles, default_site=graph.default_site, meta=graph.meta)


def make_faces(graph: BoardGraph) -> BoardGraph:
    return infer_faces(graph)


__all__ = [
    "TransformKind", "dual", "subdivide", "merge", "intersect", "remove", "add", "complete",
    "transform", "rotate", "scale", "shift", "skew", "trim", "renumber", "make_faces",
]
