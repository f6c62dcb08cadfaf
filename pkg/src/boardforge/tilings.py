"""Tiling generators with exact analytic coordinates (unit edge length).

Every periodic tiling is described by two lattice vectors plus the
prototiles of one translational unit; the regular generators below use
closed-form layouts instead so their dimensions match board conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from . import geometry as geo
from .errors import InvalidDimension, InvalidRingSpec, UnsupportedTiling
from .geometry import MERGE_EPS
from .graph import BoardGraph, SiteType, build_graph, from_polygons

SQRT3 = math.sqrt(3.0)
SQRT2 = math.sqrt(2.0)
ARC_SEGS = 8


class TilingKind(Enum):
    Square = "square"
    Hex = "hex"
    Tri = "tri"
    T488 = "T488"
    T4612 = "T4612"
    T3464 = "T3464"
    T3636 = "T3636"
    T31212 = "T31212"
    T33336 = "T33336"
    T33344 = "T33344"
    T33434 = "T33434"
    Concentric = "concentric"
    Brick = "brick"

    @classmethod
    def parse(cls, text: str) -> "TilingKind":
        for k in cls:
            if k.value.lower() == text.lower() or k.name.lower() == text.lower():
                return k
        raise UnsupportedTiling(f"unknown tiling {text!r}")

    @property
    def is_semiregular(self) -> bool:
        return self.value.startswith("T")

    @property
    def configuration(self) -> tuple:
        """Cyclic polygon sizes around every vertex, e.g. (3, 4, 6, 4)."""
        if not self.is_semiregular:
            return {"square": (4, 4, 4, 4), "hex": (6, 6, 6), "tri": (3,) * 6}.get(self.value, ())
        digits = self.value[1:]
        out, i = [], 0
        while i < len(digits):
            if digits[i] == "1":
                out.append(int(digits[i:i + 2]))
                i += 2
            else:
                out.append(int(digits[i]))
                i += 1
        return tuple(out)


SEMIREGULAR = tuple(k for k in TilingKind if k.is_semiregular)


@dataclass(frozen=True)
class TilingSpec:
    kind: TilingKind
    size: tuple = (1,)
    use_site: SiteType = SiteType.Cell
    ring_counts: tuple = field(default=())

    def __post_init__(self):
        if self.kind == TilingKind.Concentric:
            if not self.ring_counts:
                raise InvalidRingSpec("concentric tiling needs at least one ring")
        elif any(int(s) < 1 for s in self.size):
            raise InvalidDimension(f"{self.kind.value} size must be >= 1, got {self.size}")


def generate(spec: TilingSpec) -> BoardGraph:
    kind = spec.kind
    if kind == TilingKind.Square:
        if len(spec.size) == 2:
            return generate_rectangle(spec.size[0], spec.size[1], spec.use_site)
        return generate_square(spec.size[0], spec.use_site)
    if kind == TilingKind.Hex:
        return generate_hex(spec.size[0], spec.use_site)
    if kind == TilingKind.Tri:
        return generate_tri(spec.size[0], spec.use_site)
    if kind == TilingKind.Concentric:
        return generate_concentric(list(spec.ring_counts))
    if kind == TilingKind.Brick:
        rows = spec.size[0]
        cols = spec.size[1] if len(spec.size) > 1 else rows
        return generate_brick(rows, cols)
    return generate_semiregular(kind, spec.size[0])


def _check_dim(*dims):
    for d in dims:
        if not isinstance(d, int) or d < 1:
            raise InvalidDimension(f"board dimension must be a positive integer, got {d!r}")


def _single_vertex(kind: TilingKind, use: SiteType) -> BoardGraph:
    return build_graph([(0.0, 0.0)], [], default_site=use, meta={"tiling": kind.value})


# ---------------------------------------------------------------------------
# regular tilings


def generate_square(n: int, use_site: SiteType = SiteType.Cell) -> BoardGraph:
    """n cells per side, or n vertices per side when playing on vertices/edges."""
    _check_dim(n)
    return generate_rectangle(n, n, use_site)


def generate_rectangle(rows: int, cols: int, use_site: SiteType = SiteType.Cell) -> BoardGraph:
    _check_dim(rows, cols)
    use_site = SiteType(use_site)
    if use_site != SiteType.Cell:
        rows, cols = rows - 1, cols - 1
    if rows == 0 or cols == 0:
        # a single row of vertices
        positions = [(float(i), 0.0) for i in range(max(rows, cols) + 1)]
        if rows == cols == 0:
            return _single_vertex(TilingKind.Square, use_site)
        pairs = [(i, i + 1) for i in range(len(positions) - 1)]
        return build_graph(positions, pairs, default_site=use_site, meta={"tiling": "square"})
    polys = [[(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
             for j in range(rows) for i in range(cols)]
    return from_polygons(polys, default_site=use_site, meta={"tiling": "square"})


def hex_center(q: int, r: int):
    """Pointy-top axial coordinates to the plane (unit edge)."""
    return (SQRT3 * (q + r / 2.0), 1.5 * r)


def hex_polygon(center):
    return geo.regular_polygon(6, center, 1.0, 90.0)


def generate_hex(n: int, use_site: SiteType = SiteType.Cell) -> BoardGraph:
    """Hexagonal board of pointy-top hexagons, ``n`` cells per side."""
    _check_dim(n)
    polys = []
    for r in range(-(n - 1), n):
        for q in range(-(n - 1), n):
            if abs(q + r) <= n - 1:
                polys.append(hex_polygon(hex_center(q, r)))
    return from_polygons(polys, default_site=SiteType(use_site), meta={"tiling": "hex"})


def tri_point(i: float, j: float):
    return (i + j / 2.0, j * SQRT3 / 2.0)


def generate_tri(n: int, use_site: SiteType = SiteType.Cell) -> BoardGraph:
    """Triangle of unit triangles with ``n`` upward cells on the base row."""
    _check_dim(n)
    use_site = SiteType(use_site)
    m = n if use_site == SiteType.Cell else n - 1
    if m == 0:
        return _single_vertex(TilingKind.Tri, use_site)
    polys = []
    for j in range(m):
        for i in range(m - j):
            polys.append([tri_point(i, j), tri_point(i + 1, j), tri_point(i, j + 1)])
            if i + j <= m - 2:
                polys.append([tri_point(i + 1, j), tri_point(i + 1, j + 1), tri_point(i, j + 1)])
    return from_polygons(polys, default_site=use_site, meta={"tiling": "tri"})


# ---------------------------------------------------------------------------
# periodic descriptions


@dataclass(frozen=True)
class Lattice:
    a: tuple
    b: tuple
    prototiles: tuple  # first prototile is centred on the origin
    hexagonal: bool

    def coords(self, p):
        """Lattice coordinates (s, t) with p = s*a + t*b."""
        (ax, ay), (bx, by) = self.a, self.b
        det = ax * by - ay * bx
        return ((p[0] * by - p[1] * bx) / det, (ax * p[1] - ay * p[0]) / det)

    def norm(self, p) -> float:
        s, t = self.coords(p)
        if self.hexagonal:
            return max(abs(s), abs(t), abs(s + t))
        return max(abs(s), abs(t))

    def translate(self, i: int, j: int):
        ox = i * self.a[0] + j * self.b[0]
        oy = i * self.a[1] + j * self.b[1]
        for poly in self.prototiles:
            yield [(x + ox, y + oy) for x, y in poly]


def _reg(n, center, start):
    radius = 1.0 / (2.0 * math.sin(math.pi / n))
    return geo.regular_polygon(n, center, radius, start)


def _scaled(v, k):
    return (v[0] * k, v[1] * k)


def _plus(*vs):
    return (sum(v[0] for v in vs), sum(v[1] for v in vs))


def _hex_basis(length):
    return (length, 0.0), (length / 2.0, length * SQRT3 / 2.0)


def _snub_square_lattice() -> Lattice:
    L = (1.0 + SQRT3) / SQRT2
    a, b = (L, 0.0), (0.0, L)
    squares = [_reg(4, (0.0, 0.0), 60.0), _reg(4, (L / 2, L / 2), 30.0)]
    pts = []
    for i in range(-2, 3):
        for j in range(-2, 3):
            for sq in squares:
                pts.extend((x + i * L, y + j * L) for x, y in sq)
    pts, _ = _unique(pts)
    tris = _unit_triangles(pts)
    lat = Lattice(a, b, tuple(squares), False)
    return Lattice(a, b, tuple(squares + _in_unit(lat, tris)), False)


def _snub_hex_lattice() -> Lattice:
    e1, e2 = (1.0, 0.0), (0.5, SQRT3 / 2)
    a = _plus(_scaled(e1, 2), e2)
    b = _plus(_scaled(e1, -1), _scaled(e2, 3))
    hexagon = _reg(6, (0.0, 0.0), 0.0)

    def pt(m, n):
        return _plus(_scaled(e1, m), _scaled(e2, n))

    tris = []
    for m in range(-6, 7):
        for n in range(-6, 7):
            for tri in (((m, n), (m + 1, n), (m, n + 1)),
                        ((m + 1, n), (m + 1, n + 1), (m, n + 1))):
                if any((3 * u + v) % 7 == 0 for u, v in tri):
                    continue
                tris.append([pt(u, v) for u, v in tri])
    lat = Lattice(a, b, (hexagon,), True)
    return Lattice(a, b, tuple([hexagon] + _in_unit(lat, tris)), True)


def _unique(pts):
    from .graph import merge_points
    return merge_points(pts)


def _unit_triangles(pts):
    near = {}
    for i, p in enumerate(pts):
        for j in range(i + 1, len(pts)):
            if abs(geo.dist(p, pts[j]) - 1.0) < 1e-9:
                near.setdefault(i, set()).add(j)
                near.setdefault(j, set()).add(i)
    tris = []
    for i in near:
        for j in near[i]:
            if j <= i:
                continue
            for k in near[i] & near[j]:
                if k > j:
                    tris.append([pts[i], pts[j], pts[k]])
    return tris


def _in_unit(lat: Lattice, polys):
    out = []
    for poly in polys:
        s, t = lat.coords(geo.mean_point(poly))
        if 0.0 <= s + 1e-9 < 1.0 and 0.0 <= t + 1e-9 < 1.0:
            out.append(poly)
    out.sort(key=lambda p: (round(geo.mean_point(p)[1], 9), round(geo.mean_point(p)[0], 9)))
    return out


@lru_cache(maxsize=None)
def lattice_for(kind: TilingKind) -> Lattice:
    if kind == TilingKind.Square:
        return Lattice((1.0, 0.0), (0.0, 1.0), (_reg(4, (0.5, 0.5), 45.0),), False)
    if kind == TilingKind.Hex:
        a, b = _hex_basis(SQRT3)
        return Lattice(a, b, (hex_polygon((0.0, 0.0)),), True)
    if kind == TilingKind.Tri:
        h = SQRT3 / 2
        return Lattice((1.0, 0.0), (0.5, h),
                       ([(0.0, 0.0), (1.0, 0.0), (0.5, h)], [(1.0, 0.0), (1.5, h), (0.5, h)]), True)
    if kind == TilingKind.T488:
        L = 1.0 + SQRT2
        return Lattice((L, 0.0), (0.0, L),
                       (_reg(8, (0.0, 0.0), 22.5), _reg(4, (L / 2, L / 2), 0.0)), False)
    if kind == TilingKind.T4612:
        a, b = _hex_basis(3.0 + SQRT3)
        return Lattice(a, b, (
            _reg(12, (0.0, 0.0), 15.0),
            _reg(4, _scaled(a, 0.5), 45.0),
            _reg(4, _scaled(b, 0.5), 105.0),
            _reg(4, _scaled(_plus(b, _scaled(a, -1)), 0.5), 165.0),
            _reg(6, _scaled(_plus(a, b), 1 / 3), 0.0),
            _reg(6, _scaled(_plus(a, b), 2 / 3), 0.0),
        ), True)
    if kind == TilingKind.T3464:
        a, b = _hex_basis(1.0 + SQRT3)
        return Lattice(a, b, (
            _reg(6, (0.0, 0.0), 30.0),
            _reg(4, _scaled(a, 0.5), 45.0),
            _reg(4, _scaled(b, 0.5), 105.0),
            _reg(4, _scaled(_plus(b, _scaled(a, -1)), 0.5), 165.0),
            _reg(3, _scaled(_plus(a, b), 1 / 3), 210.0),
            _reg(3, _scaled(_plus(a, b), 2 / 3), 30.0),
        ), True)
    if kind == TilingKind.T3636:
        a, b = _hex_basis(2.0)
        return Lattice(a, b, (
            _reg(6, (0.0, 0.0), 0.0),
            _reg(3, _scaled(_plus(a, b), 1 / 3), 270.0),
            _reg(3, _scaled(_plus(a, b), 2 / 3), 90.0),
        ), True)
    if kind == TilingKind.T31212:
        a, b = _hex_basis(2.0 + SQRT3)
        return Lattice(a, b, (
            _reg(12, (0.0, 0.0), 15.0),
            _reg(3, _scaled(_plus(a, b), 1 / 3), 30.0),
            _reg(3, _scaled(_plus(a, b), 2 / 3), 90.0),
        ), True)
    if kind == TilingKind.T33336:
        return _snub_hex_lattice()
    if kind == TilingKind.T33344:
        h = SQRT3 / 2
        return Lattice((1.0, 0.0), (0.5, 1.0 + h), (
            _reg(4, (0.0, 0.0), 45.0),
            [(-0.5, 0.5), (0.5, 0.5), (0.0, 0.5 + h)],
            [(0.5, 0.5), (1.0, 0.5 + h), (0.0, 0.5 + h)],
        ), False)
    if kind == TilingKind.T33434:
        return _snub_square_lattice()
    raise UnsupportedTiling(f"{kind.value} has no periodic description")


@lru_cache(maxsize=None)
def _corona_radius(kind: TilingKind) -> float:
    """Lattice norm reached by the origin tile and every tile touching it."""
    lat = lattice_for(kind)
    origin = lat.prototiles[0]
    best = 0.0
    for i in range(-2, 3):
        for j in range(-2, 3):
            for poly in lat.translate(i, j):
                if any(geo.dist(p, q) < MERGE_EPS for p in poly for q in origin):
                    best = max(best, lat.norm(geo.mean_point(poly)))
    return best


def semiregular_tiles(kind: TilingKind, rings: int) -> list:
    lat = lattice_for(kind)
    limit = (rings - 1) + _corona_radius(kind) + 1e-9
    reach = rings + 3
    tiles = []
    for j in range(-reach, reach + 1):
        for i in range(-reach, reach + 1):
            for poly in lat.translate(i, j):
                if lat.norm(geo.mean_point(poly)) <= limit:
                    tiles.append(poly)
    return tiles


def generate_semiregular(kind: TilingKind, rings: int) -> BoardGraph:
    """Tiles within ``rings`` lattice shells of the origin tile and its corona."""
    if isinstance(kind, str):
        kind = TilingKind.parse(kind)
    if not kind.is_semiregular:
        raise UnsupportedTiling(f"{kind.value} is not one of the eight semi-regular tilings")
    _check_dim(rings)
    return from_polygons(semiregular_tiles(kind, rings), meta={"tiling": kind.value})


def tiles_in_region(kind: TilingKind, region, *, whole: bool = False) -> list:
    """Prototile copies whose centroid (or every corner, with ``whole``) lies in ``region``."""
    lat = lattice_for(kind)
    xs = [p[0] for p in region]
    ys = [p[1] for p in region]
    corners = [(min(xs), min(ys)), (max(xs), min(ys)), (max(xs), max(ys)), (min(xs), max(ys))]
    st = [lat.coords(c) for c in corners]
    i0 = math.floor(min(s for s, _ in st)) - 2
    i1 = math.ceil(max(s for s, _ in st)) + 2
    j0 = math.floor(min(t for _, t in st)) - 2
    j1 = math.ceil(max(t for _, t in st)) + 2
    out = []
    for j in range(j0, j1 + 1):
        for i in range(i0, i1 + 1):
            for poly in lat.translate(i, j):
                if whole:
                    ok = all(geo.point_in_polygon(p, region) for p in poly)
                else:
                    ok = geo.point_in_polygon(geo.mean_point(poly), region)
                if ok:
                    out.append(poly)
    return out


# ---------------------------------------------------------------------------
# custom tilings


def _validate_rings(counts) -> tuple:
    if not counts:
        raise InvalidRingSpec("concentric tiling needs at least one ring")
    if any(not isinstance(c, int) or c < 1 for c in counts):
        raise InvalidRingSpec(f"ring counts must be positive integers, got {counts}")
    disc = counts[0] == 1
    rest = counts[1:] if disc else counts
    if disc and not rest:
        return True, 0
    if len(set(rest)) != 1:
        raise InvalidRingSpec(f"all rings must hold the same number of cells, got {counts}")
    k = rest[0]
    if k < 2:
        raise InvalidRingSpec("a ring needs at least two sectors")
    return disc, k


def generate_concentric(ring_counts) -> BoardGraph:
    """Annular sectors on concentric circles; a leading 1 adds a central disc.

    Arcs are polylines of ARC_SEGS segments per cell side, with identical
    sample angles on every circle so neighbouring rings share vertices.
    """
    ring_counts = [int(c) for c in ring_counts]
    disc, k = _validate_rings(ring_counts)
    n_rings = len(ring_counts) - (1 if disc else 0)
    samples = max(k, 4 if disc else k) * ARC_SEGS
    base = max(1.0, k / (2.0 * math.pi))

    def arc(radius, t):
        a = 2.0 * math.pi * t / samples
        return (radius * math.cos(a), radius * math.sin(a))

    radii = [base + i for i in range(n_rings + 1)]
    polys = []
    if disc:
        polys.append([arc(base, t) for t in range(samples)])
    for i in range(n_rings):
        r0, r1 = radii[i], radii[i + 1]
        for j in range(k):
            t0, t1 = j * ARC_SEGS, (j + 1) * ARC_SEGS
            inner = [arc(r0, t) for t in range(t0, t1 + 1)]
            outer = [arc(r1, t) for t in range(t1, t0 - 1, -1)]
            polys.append(inner + outer)
    meta = {
        "tiling": "concentric",
        "concentric": {
            "center": [0.0, 0.0],
            "radii": radii if n_rings else [base],
            "sectors": k,
            "disc": disc,
            "offset": 0.0,
            "orientation": 1,
        },
    }
    return from_polygons(polys, meta=meta, exact=True)


def concentric_address(graph: BoardGraph, cell: int):
    """(ring, sector) of a cell on a concentric board, ring 0 innermost.

    With a central disc the disc is ring 0 (sector 0) and annuli start at 1.
    """
    info = graph.meta.get("concentric")
    if info is None:
        return None
    cx, cy = info["center"]
    x, y = graph.cells[cell].centroid
    dx, dy = x - cx, y - cy
    r = math.hypot(dx, dy)
    radii = info["radii"]
    disc = info["disc"]
    if disc and r < radii[0] - 1e-9:
        return (0, 0)
    # the vertex mean of a wide sector can sit inside its inner arc; the
    # innermost corner lies exactly on it
    inner = min(math.hypot(px - cx, py - cy) for px, py in graph.cell_polygon(cell))
    ring = min(range(max(1, len(radii) - 1)), key=lambda i: abs(radii[i] - inner))
    k = info["sectors"]
    ang = (info["orientation"] * (math.atan2(dy, dx) - info["offset"])) % (2 * math.pi)
    sector = int(ang / (2 * math.pi / k)) % k
    return (ring + (1 if disc else 0), sector)


def generate_brick(rows: int, cols: int) -> BoardGraph:
    """Running bond of 2x1 bricks; odd rows shift by one unit.

    With more than one row, half bricks square off both ends so every row
    spans the same width.
    """
    _check_dim(rows, cols)
    polys = []
    for r in range(rows):
        y0, y1 = float(r), float(r + 1)
        spans = []
        if rows == 1:
            spans = [(2 * c, 2 * c + 2) for c in range(cols)]
        elif r % 2 == 0:
            spans = [(2 * c, 2 * c + 2) for c in range(cols)] + [(2 * cols, 2 * cols + 1)]
        else:
            spans = [(0, 1)] + [(2 * c + 1, 2 * c + 3) for c in range(cols)]
        for x0, x1 in spans:
            polys.append([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])
    return from_polygons(polys, meta={"tiling": "brick"})
