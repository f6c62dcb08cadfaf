"""Board outlines, region restriction and the diagonals modifier."""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass
from enum import Enum

from . import geometry as geo
from .errors import (EmptyResultWarning, IncompatibleShape, InvalidDimension, InvalidPolygon,
                     NoQuadCells, UnsupportedDiagType)
from .graph import BoardGraph, assemble, build_graph, from_polygons
from .tilings import SQRT3, TilingKind, hex_center, tiles_in_region


class ShapeKind(Enum):
    Square = "square"
    Rectangle = "rectangle"
    Hexagon = "hexagon"
    Triangle = "triangle"
    RegularPolygon = "regular"
    Poly = "poly"


class Mode(Enum):
    Keep = "keep"
    Clip = "clip"
    Hole = "hole"


class DiagType(Enum):
    Alquerque = "Alquerque"
    Solid = "Solid"
    Concentric = "Concentric"
    Radiating = "Radiating"

    @classmethod
    def parse(cls, text: str) -> "DiagType":
        for d in cls:
            if d.value.lower() == text.lower():
                return d
        raise UnsupportedDiagType(f"unknown diagonal type {text!r}")


def make_polygon(points) -> list:
    """Validate a simple polygon and return it counter-clockwise."""
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 3:
        raise InvalidPolygon(f"a polygon needs at least 3 points, got {len(pts)}")
    if not geo.is_simple_polygon(pts):
        raise InvalidPolygon("polygon outline intersects itself or repeats a point")
    if geo.signed_area(pts) < 0:
        pts.reverse()
    return pts


@dataclass(frozen=True)
class ShapeSpec:
    kind: ShapeKind
    params: tuple = ()
    points: tuple = ()  # Poly only

    def __post_init__(self):
        if self.kind == ShapeKind.Poly:
            make_polygon(self.points)
            return
        need = {ShapeKind.Rectangle: 2, ShapeKind.RegularPolygon: 2}.get(self.kind, 1)
        if len(self.params) != need:
            raise InvalidDimension(f"{self.kind.value} takes {need} dimension(s), got {len(self.params)}")
        if any(p <= 0 for p in self.params):
            raise InvalidDimension(f"{self.kind.value} dimensions must be positive, got {self.params}")
        if self.kind == ShapeKind.RegularPolygon and (self.params[0] < 3 or self.params[0] != int(self.params[0])):
            raise InvalidDimension(f"a regular polygon needs an integer side count >= 3, got {self.params[0]}")

    @property
    def default_tiling(self):
        return {ShapeKind.Square: TilingKind.Square, ShapeKind.Rectangle: TilingKind.Square,
                ShapeKind.Hexagon: TilingKind.Hex, ShapeKind.Triangle: TilingKind.Tri}.get(self.kind)


def _natural(spec: ShapeSpec) -> list:
    k, p = spec.kind, spec.params
    if k == ShapeKind.Square:
        n = p[0]
        return [(0.0, 0.0), (n, 0.0), (n, n), (0.0, n)]
    if k == ShapeKind.Rectangle:
        rows, cols = p
        return [(0.0, 0.0), (cols, 0.0), (cols, rows), (0.0, rows)]
    if k == ShapeKind.Hexagon:
        return geo.regular_polygon(6, (0.0, 0.0), float(p[0]), 0.0)
    if k == ShapeKind.Triangle:
        n = float(p[0])
        return [(0.0, 0.0), (n, 0.0), (n / 2.0, n * SQRT3 / 2.0)]
    if k == ShapeKind.RegularPolygon:
        sides, size = int(p[0]), float(p[1])
        radius = size / (2.0 * math.sin(math.pi / sides))
        return geo.regular_polygon(sides, (0.0, 0.0), radius, 90.0 - 180.0 / sides)
    # validated on construction; echoed in the caller's order
    return [(float(x), float(y)) for x, y in spec.points]


def shape_to_polygon(spec: ShapeSpec, tiling: TilingKind | None = None) -> list:
    """Outline in the tiling's frame, sized so ``n`` cells fit per side.

    Square/rectangle fit the square grid, hexagon/triangle fit the hex and
    triangular grids; other pairings of those four with a regular tiling are
    refused. Semi-regular and custom tilings use the shape's natural frame.
    """
    k = spec.kind
    if k in (ShapeKind.Poly, ShapeKind.RegularPolygon) or tiling is None:
        return _natural(spec)
    if tiling == TilingKind.Square:
        if k in (ShapeKind.Square, ShapeKind.Rectangle):
            return _natural(spec)
    elif tiling == TilingKind.Hex:
        n = spec.params[0]
        if k == ShapeKind.Hexagon:
            return geo.regular_polygon(6, (0.0, 0.0), SQRT3 * (n - 0.5), 0.0)
        if k == ShapeKind.Triangle:
            # triangle through the outer cell centres, pushed out half a row
            inradius = SQRT3 * (n - 1) / (2.0 * SQRT3) + 0.75
            cx = SQRT3 * (n - 1) / 2.0
            cy = hex_center(0, n - 1)[1] / 3.0
            return geo.regular_polygon(3, (cx, cy), 2.0 * inradius, 210.0)
    elif tiling == TilingKind.Tri:
        if k in (ShapeKind.Triangle, ShapeKind.Hexagon):
            return _natural(spec)
    else:
        return _natural(spec)
    raise IncompatibleShape(f"{k.value} outline does not align with the {tiling.value} tiling")


def shaped_board(tiling: TilingKind, spec: ShapeSpec, meta=None) -> BoardGraph:
    """Every tile of ``tiling`` whose centroid lies inside the shape outline."""
    region = shape_to_polygon(spec, tiling)
    tiles = tiles_in_region(tiling, region)
    if not tiles:
        warnings.warn("shape contains no cells", EmptyResultWarning, stacklevel=2)
        return assemble([], [], meta={"tiling": tiling.value, "warnings": ("EmptyResult",)})
    return from_polygons(tiles, meta=meta or {"tiling": tiling.value})


def polygon_board(points) -> BoardGraph:
    """A single-cell board from an outline."""
    return from_polygons([make_polygon(points)], meta={"tiling": "poly"})


def _empty_meta(meta):
    out = dict(meta)
    out["warnings"] = tuple(sorted(set(out.get("warnings", ())) | {"EmptyResult"}))
    return out


def keep_cells(graph: BoardGraph, keep) -> BoardGraph:
    """Sub-board made of the given cells; orphaned edges and vertices go."""
    keep = sorted(set(keep))
    vmap = {}
    for c in keep:
        for v in graph.cells[c].vertices:
            vmap.setdefault(v, len(vmap))
    positions = [None] * len(vmap)
    for old, new in vmap.items():
        positions[new] = graph.vertices[old].position
    pairs = {graph.edges[e].endpoints for c in keep for e in graph.cells[c].edges}
    pairs = [(vmap[a], vmap[b]) for a, b in sorted(pairs)]
    cycles = [[vmap[v] for v in graph.cells[c].vertices] for c in keep]
    meta = dict(graph.meta)
    if not keep:
        warnings.warn("restriction removed every cell", EmptyResultWarning, stacklevel=3)
        meta = _empty_meta(meta)
    return assemble(positions, pairs, cycles, default_site=graph.default_site, meta=meta)


def restrict(graph: BoardGraph, region, mode: Mode = Mode.Keep) -> BoardGraph:
    """Keep (centroid inside), Hole (centroid outside) or Clip (all corners inside)."""
    region = make_polygon(region)
    mode = Mode(mode)
    chosen = []
    for c, rec in enumerate(graph.cells):
        if mode == Mode.Clip:
            hit = all(geo.point_in_polygon(graph.vertices[v].position, region) for v in rec.vertices)
        else:
            inside = geo.point_in_polygon(rec.centroid, region)
            hit = inside if mode == Mode.Keep else not inside
        if hit:
            chosen.append(c)
    return keep_cells(graph, chosen)


def _alquerque_cells(graph: BoardGraph, quads: list) -> list:
    """Checkerboard parity over edge-sharing quads, anchored at the lowest quad."""
    quad_set = set(quads)
    colour = {}
    for seed in quads:
        if seed in colour:
            continue
        colour[seed] = 0
        todo = deque([seed])
        while todo:
            c = todo.popleft()
            for e in graph.cells[c].edges:
                for d in graph.edges[e].cells:
                    if d != c and d in quad_set and d not in colour:
                        colour[d] = 1 - colour[c]
                        todo.append(d)
    return [c for c in quads if colour[c] == 0]


def add_diagonal_edges(graph: BoardGraph, diag_type: DiagType | str = DiagType.Solid) -> BoardGraph:
    """Cross chosen quadrilateral cells with both diagonals through a new centre vertex."""
    if isinstance(diag_type, str):
        diag_type = DiagType.parse(diag_type)
    if diag_type not in (DiagType.Solid, DiagType.Alquerque):
        raise UnsupportedDiagType(f"diagonals:{diag_type.value} is not implemented")
    quads = [c for c, rec in enumerate(graph.cells) if len(rec.vertices) == 4]
    if not quads:
        raise NoQuadCells("diagonals need quadrilateral cells")
    chosen = quads if diag_type == DiagType.Solid else _alquerque_cells(graph, quads)
    positions = list(graph.positions)
    pairs = [e.endpoints for e in graph.edges]
    for c in chosen:
        hub = len(positions)
        positions.append(graph.cells[c].centroid)
        pairs.extend((hub, v) for v in graph.cells[c].vertices)
    return build_graph(positions, pairs, default_site=graph.default_site, meta=graph.meta)
