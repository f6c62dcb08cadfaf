"""The board graph: vertices, edges and cells with mutual cross-references.

Every constructor funnels through :func:`assemble`, which computes the
cross-reference lists and applies canonical numbering (elements sorted by
the ``(y, x)`` of their position, edge midpoint or cell centroid).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import geometry as geo
from .errors import DegenerateEdge, InvalidElement, NonPlanarInput
from .geometry import MERGE_EPS


class SiteType(IntEnum):
    Vertex = 0
    Edge = 1
    Cell = 2

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "SiteType":
        for st in cls:
            if st.name.lower() == text.lower():
                return st
        raise ValueError(f"unknown site type {text!r}")


class ElementId(NamedTuple):
    site_type: SiteType
    index: int

    def __str__(self) -> str:
        return f"{self.site_type.name}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "ElementId":
        kind, _, idx = text.partition(":")
        if not idx:
            raise ValueError(f"element id must look like Type:index, got {text!r}")
        return cls(SiteType.parse(kind), int(idx))


@dataclass(frozen=True)
class Site:
    """A playable site. ``level`` is an address only; geometry ignores it."""

    index: int
    site_type: SiteType = SiteType.Cell
    level: int = 0

    def __post_init__(self):
        if self.index < 0 or self.level < 0:
            raise ValueError("site index and level must be non-negative")

    @property
    def element(self) -> ElementId:
        return ElementId(self.site_type, self.index)


class VertexRec(NamedTuple):
    position: tuple
    edges: tuple  # CCW by outgoing angle
    cells: tuple


class EdgeRec(NamedTuple):
    endpoints: tuple  # (low, high)
    cells: tuple


class CellRec(NamedTuple):
    vertices: tuple  # CCW cycle
    edges: tuple  # edges[i] joins vertices[i] and vertices[i + 1]
    centroid: tuple


@dataclass(frozen=True, eq=False)
class BoardGraph:
    vertices: tuple
    edges: tuple
    cells: tuple
    default_site: SiteType = SiteType.Cell
    meta: Mapping = field(default_factory=dict)

    def __repr__(self) -> str:
        return (f"BoardGraph(V={len(self.vertices)}, E={len(self.edges)}, "
                f"C={len(self.cells)}, default_site={self.default_site.name})")

    # -- basic accessors -------------------------------------------------

    @property
    def counts(self) -> tuple:
        return len(self.vertices), len(self.edges), len(self.cells)

    def count(self, site_type: SiteType) -> int:
        return (len(self.vertices), len(self.edges), len(self.cells))[site_type]

    @cached_property
    def positions(self) -> list:
        return [v.position for v in self.vertices]

    @cached_property
    def points(self) -> np.ndarray:
        return np.array(self.positions, dtype=float).reshape(-1, 2)

    def midpoint(self, e: int):
        a, b = self.edges[e].endpoints
        pa, pb = self.vertices[a].position, self.vertices[b].position
        return ((pa[0] + pb[0]) / 2.0, (pa[1] + pb[1]) / 2.0)

    def location(self, site_type: SiteType, index: int):
        """Representative point: vertex position, edge midpoint or cell centroid."""
        if site_type == SiteType.Vertex:
            return self.vertices[index].position
        if site_type == SiteType.Edge:
            return self.midpoint(index)
        return self.cells[index].centroid

    def cell_polygon(self, c: int) -> list:
        return [self.vertices[v].position for v in self.cells[c].vertices]

    def check_element(self, element: ElementId) -> ElementId:
        st, idx = element
        if not 0 <= idx < self.count(st):
            raise InvalidElement(f"{st.name}:{idx} out of range (board has {self.count(st)})")
        return ElementId(SiteType(st), idx)

    def edge_index(self, a: int, b: int):
        return self._edge_lookup.get((min(a, b), max(a, b)))

    @cached_property
    def _edge_lookup(self) -> dict:
        return {e.endpoints: i for i, e in enumerate(self.edges)}

    def vertex_neighbors(self, v: int) -> list:
        out = []
        for e in self.vertices[v].edges:
            a, b = self.edges[e].endpoints
            out.append(b if a == v else a)
        return out

    def components(self) -> list:
        """Connected components as sorted vertex lists (edges only)."""
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = e.endpoints
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = {}
        for v in range(len(self.vertices)):
            groups.setdefault(find(v), []).append(v)
        return [groups[k] for k in sorted(groups)]

    def with_default_site(self, site_type: SiteType) -> "BoardGraph":
        return replace(self, default_site=SiteType(site_type))

    def with_meta(self, **kw) -> "BoardGraph":
        meta = dict(self.meta)
        meta.update(kw)
        return replace(self, meta=meta)

    # -- analysis (computed once, cached) --------------------------------

    @cached_property
    def relations(self):
        from .relations import compute_relations
        return compute_relations(self)

    @cached_property
    def directions(self):
        from .directions import assign_absolute_directions
        return assign_absolute_directions(self, self.relations)

    @cached_property
    def radials(self):
        from .traversal import generate_radials
        return generate_radials(self, self.relations, self.directions, branching=False)

    def analyze(self) -> "BoardGraph":
        """Force every analysis table so the graph can be shared read-only."""
        self.relations
        self.directions
        self.radials
        return self


# ---------------------------------------------------------------------------
# construction


def _canon_key(p) -> tuple:
    return (round(p[1], 6) + 0.0, round(p[0], 6) + 0.0)


def assemble(positions: Sequence, edge_pairs: Iterable, cell_cycles: Iterable = (), *,
             default_site: SiteType = SiteType.Cell, meta: Mapping | None = None,
             canonical: bool = True) -> BoardGraph:
    """Build a BoardGraph from already-clean geometry.

    ``positions`` must be free of coincident points and ``edge_pairs`` free
    of crossings; ``cell_cycles`` are vertex index lists (either orientation),
    every consecutive pair of which must be an edge. With ``canonical`` the
    three element arrays are sorted by (y, x) and renumbered.
    """
    positions = [(float(p[0]) + 0.0, float(p[1]) + 0.0) for p in positions]
    edge_pairs = list(edge_pairs)
    nv = len(positions)
    pairs = set()
    for a, b in edge_pairs:
        a, b = int(a), int(b)
        if a == b:
            raise DegenerateEdge(f"edge ({a}, {b}) joins a vertex to itself")
        if not (0 <= a < nv and 0 <= b < nv):
            raise InvalidElement(f"edge ({a}, {b}) references a missing vertex")
        pairs.add((min(a, b), max(a, b)))
    cycles = []
    for cyc in cell_cycles:
        cyc = [int(v) for v in cyc]
        pts = [positions[v] for v in cyc]
        if len(cyc) >= 3 and geo.signed_area(pts) < 0:
            cyc.reverse()
        cycles.append(cyc)

    if canonical:
        vorder = sorted(range(nv), key=lambda i: (_canon_key(positions[i]), i))
        vmap = {old: new for new, old in enumerate(vorder)}
        positions = [positions[i] for i in vorder]
        pairs = {(min(vmap[a], vmap[b]), max(vmap[a], vmap[b])) for a, b in pairs}
        cycles = [[vmap[v] for v in cyc] for cyc in cycles]

    def mid(pair):
        pa, pb = positions[pair[0]], positions[pair[1]]
        return ((pa[0] + pb[0]) / 2.0, (pa[1] + pb[1]) / 2.0)

    if canonical:
        edge_list = sorted(pairs, key=lambda pr: (_canon_key(mid(pr)), pr))
    else:
        edge_list = list(_dedupe_in_order(edge_pairs))
    elookup = {pr: i for i, pr in enumerate(edge_list)}

    normalized = []
    for cyc in cycles:
        if len(cyc) >= 3:
            k = cyc.index(min(cyc))
            cyc = cyc[k:] + cyc[:k]
        normalized.append(cyc)
    cycles = normalized
    if canonical:
        def ckey(cyc):
            return (_canon_key(geo.mean_point([positions[v] for v in cyc])), tuple(sorted(cyc)))
        cycles.sort(key=ckey)

    v_edges = [[] for _ in range(nv)]
    v_cells = [[] for _ in range(nv)]
    e_cells = [[] for _ in edge_list]
    for i, (a, b) in enumerate(edge_list):
        v_edges[a].append(i)
        v_edges[b].append(i)
    cells = []
    for ci, cyc in enumerate(cycles):
        n = len(cyc)
        ce = []
        for k in range(n):
            a, b = cyc[k], cyc[(k + 1) % n]
            e = elookup.get((min(a, b), max(a, b)))
            if e is None:
                raise InvalidElement(f"cell boundary step {a}->{b} is not an edge")
            ce.append(e)
            if ci not in e_cells[e]:
                e_cells[e].append(ci)
        for v in cyc:
            if ci not in v_cells[v]:
                v_cells[v].append(ci)
        centroid = geo.mean_point([positions[v] for v in cyc]) if cyc else (0.0, 0.0)
        cells.append(CellRec(tuple(cyc), tuple(ce), centroid))

    def out_angle(v, e):
        a, b = edge_list[e]
        other = b if a == v else a
        return geo.heading(positions[v], positions[other])

    vertices = []
    for v in range(nv):
        inc = sorted(v_edges[v], key=lambda e: (out_angle(v, e), e))
        vertices.append(VertexRec(positions[v], tuple(inc), tuple(sorted(v_cells[v]))))
    edges = [EdgeRec(pr, tuple(sorted(e_cells[i]))) for i, pr in enumerate(edge_list)]
    return BoardGraph(tuple(vertices), tuple(edges), tuple(cells),
                      SiteType(default_site), dict(meta or {}))


def _dedupe_in_order(edge_pairs):
    seen = set()
    for a, b in edge_pairs:
        pr = (min(int(a), int(b)), max(int(a), int(b)))
        if pr not in seen:
            seen.add(pr)
            yield pr


def merge_points(positions: Sequence, eps: float = MERGE_EPS):
    """Unify points closer than ``eps``; returns (unique points, index map)."""
    grid = {}
    unique = []
    index = []
    for p in positions:
        x, y = float(p[0]), float(p[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite vertex position {p!r}")
        gx, gy = math.floor(x / eps), math.floor(y / eps)
        hit = None
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for j in grid.get((gx + dx, gy + dy), ()):
                    if geo.dist(unique[j], (x, y)) < eps:
                        hit = j
                        break
                if hit is not None:
                    break
            if hit is not None:
                break
        if hit is None:
            hit = len(unique)
            unique.append((x, y))
            grid.setdefault((gx, gy), []).append(hit)
        index.append(hit)
    return unique, index


def build_graph(positions: Sequence, edge_pairs: Iterable, *, allow_crossings: bool = False,
                default_site: SiteType = SiteType.Cell, meta: Mapping | None = None) -> BoardGraph:
    """Freeform construction: merge vertices, split T-junctions, infer faces."""
    unique, index = merge_points(positions)
    pairs = []
    seen = set()
    for a, b in edge_pairs:
        if not (0 <= a < len(index) and 0 <= b < len(index)):
            raise InvalidElement(f"edge ({a}, {b}) references a missing vertex")
        ma, mb = index[a], index[b]
        if ma == mb:
            raise DegenerateEdge(f"edge ({a}, {b}) collapses to a single point {unique[ma]}")
        pr = (min(ma, mb), max(ma, mb))
        if pr not in seen:
            seen.add(pr)
            pairs.append(pr)
    pts = np.array(unique, dtype=float).reshape(-1, 2)
    pairs = _split_t_junctions(pts, pairs)
    crossings = geo.crossing_pairs(pts, pairs)
    if crossings and not allow_crossings:
        i, j = crossings[0]
        ea, eb = pairs[i], pairs[j]
        raise NonPlanarInput(
            f"edges {unique[ea[0]]}-{unique[ea[1]]} and {unique[eb[0]]}-{unique[eb[1]]} cross",
            pair=((unique[ea[0]], unique[ea[1]]), (unique[eb[0]], unique[eb[1]])))
    crossing_edges = {k for pr in crossings for k in pr}
    cycles = trace_faces(unique, pairs, exclude=crossing_edges)
    if crossing_edges:
        crossing_segs = [(unique[pairs[k][0]], unique[pairs[k][1]]) for k in sorted(crossing_edges)]
        cycles = [c for c in cycles if not _face_crossed(unique, c, crossing_segs)]
    return assemble(unique, pairs, cycles, default_site=default_site, meta=meta)


def _split_t_junctions(pts: np.ndarray, pairs: list) -> list:
    hits = geo.vertices_on_edges(pts, pairs)
    if not hits:
        return pairs
    out = []
    seen = set()
    for i, (a, b) in enumerate(pairs):
        chain = [(a, b)]
        if i in hits:
            pa = pts[a]
            inner = sorted(hits[i], key=lambda v: float(np.hypot(*(pts[v] - pa))))
            seq = [a] + inner + [b]
            chain = list(zip(seq, seq[1:]))
        for u, v in chain:
            pr = (min(u, v), max(u, v))
            if pr not in seen:
                seen.add(pr)
                out.append(pr)
    return out


def _face_crossed(positions, cyc, segs) -> bool:
    poly = [positions[v] for v in cyc]
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    box = (min(xs), min(ys), max(xs), max(ys))
    for a, b in segs:
        if max(a[0], b[0]) < box[0] or min(a[0], b[0]) > box[2] \
                or max(a[1], b[1]) < box[1] or min(a[1], b[1]) > box[3]:
            continue
        m = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
        if geo.strictly_inside(m, poly):
            return True
        n = len(poly)
        for k in range(n):
            if geo.segments_cross(a, b, poly[k], poly[(k + 1) % n]):
                return True
    return False


def trace_faces(positions: Sequence, pairs: Sequence, exclude=frozenset()) -> list:
    """Bounded faces of a planar straight-line embedding.

    Each half-edge u->v continues with the edge leaving v immediately
    clockwise of v->u, which walks every face with the face on its left.
    CCW walks (positive area) are the bounded faces. Bridges (edges with the
    same face on both sides) are dropped and the walk repeated, so dangling
    trees never show up in a cell boundary.
    """
    live = [pr for k, pr in enumerate(pairs) if k not in exclude]
    while True:
        faces, face_of = _walk(positions, live)
        bridges = {pr for pr in live if face_of[pr] == face_of[(pr[1], pr[0])]}
        if not bridges:
            break
        live = [pr for pr in live if pr not in bridges]

    cycles = []
    for cyc in faces:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            continue
        if geo.signed_area([positions[v] for v in cyc]) <= MERGE_EPS * MERGE_EPS:
            continue
        cycles.append(cyc)

    comp = _component_labels(len(positions), pairs)
    if len(set(comp[v] for pr in pairs for v in pr)) > 1:
        cycles = [c for c in cycles if not _contains_foreign(positions, c, comp)]
    return cycles


def _walk(positions, pairs):
    adj = {}
    for a, b in pairs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    order = {}
    for v, nbrs in adj.items():
        nbrs.sort(key=lambda w: (geo.heading(positions[v], positions[w]), w))
        for k, w in enumerate(nbrs):
            order[(v, w)] = k
    face_of = {}
    faces = []
    for a, b in sorted(pairs):
        for start in ((a, b), (b, a)):
            if start in face_of:
                continue
            fid = len(faces)
            cyc = []
            u, v = start
            while (u, v) not in face_of:
                face_of[(u, v)] = fid
                cyc.append(u)
                nbrs = adj[v]
                k = order[(v, u)]
                w = nbrs[k - 1]
                u, v = v, w
            faces.append(cyc)
    return faces, face_of


def _component_labels(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(n)]


def _contains_foreign(positions, cyc, comp) -> bool:
    poly = [positions[v] for v in cyc]
    mine = comp[cyc[0]]
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    for v, p in enumerate(positions):
        if comp[v] == mine:
            continue
        if x0 < p[0] < x1 and y0 < p[1] < y1 and geo.strictly_inside(p, poly):
            return True
    return False


def infer_faces(graph: BoardGraph) -> BoardGraph:
    """Recompute the cell set as every bounded face of the embedding."""
    pairs = [e.endpoints for e in graph.edges]
    cycles = trace_faces(graph.positions, pairs)
    return assemble(graph.positions, pairs, cycles,
                    default_site=graph.default_site, meta=graph.meta)


def renumber(graph: BoardGraph) -> BoardGraph:
    """Re-apply canonical (y, x) ordering to all three element arrays."""
    return assemble(graph.positions, [e.endpoints for e in graph.edges],
                    [c.vertices for c in graph.cells],
                    default_site=graph.default_site, meta=graph.meta)


def from_polygons(polygons: Iterable, *, default_site: SiteType = SiteType.Cell,
                  meta: Mapping | None = None, exact: bool = False) -> BoardGraph:
    """Board whose cells are the given polygons (shared corners merged).

    By default faces are re-inferred, so a region enclosed by the polygons
    becomes a cell too. With ``exact`` only the given polygons are cells
    (corners of neighbouring polygons lying on a side are still spliced in).
    """
    positions = []
    pairs = []
    spans = []
    for poly in polygons:
        base = len(positions)
        positions.extend(poly)
        n = len(poly)
        spans.append((base, n))
        pairs.extend((base + k, base + (k + 1) % n) for k in range(n))
    if not exact:
        return build_graph(positions, pairs, default_site=default_site, meta=meta)
    unique, index = merge_points(positions)
    pts = np.array(unique, dtype=float).reshape(-1, 2)
    cycles = []
    for base, n in spans:
        cycles.append(_dedupe_cycle([index[base + k] for k in range(n)]))
    sides = sorted({(min(a, b), max(a, b)) for cyc in cycles
                    for a, b in zip(cyc, cyc[1:] + cyc[:1])})
    hits = geo.vertices_on_edges(pts, sides)
    if hits:
        inner = {}
        for i, found in hits.items():
            a, b = sides[i]
            inner[(a, b)] = sorted(found, key=lambda v: geo.dist(unique[a], unique[v]))
        spliced = []
        for cyc in cycles:
            out = []
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out.append(a)
                if (min(a, b), max(a, b)) in inner:
                    mids = inner[(min(a, b), max(a, b))]
                    out.extend(mids if a < b else mids[::-1])
            spliced.append(out)
        cycles = spliced
    pairs = {(min(a, b), max(a, b)) for cyc in cycles for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    crossings = geo.crossing_pairs(pts, sorted(pairs))
    if crossings:
        raise NonPlanarInput("polygons overlap")
    return assemble(unique, sorted(pairs), cycles, default_site=default_site, meta=meta)


def _dedupe_cycle(cyc: list) -> list:
    out = [v for k, v in enumerate(cyc) if v != cyc[k - 1]]
    return out or cyc[:1]


# ---------------------------------------------------------------------------
# validation


class Violation(NamedTuple):
    kind: str
    element: object
    message: str
    severity: str = "error"


def validate(graph: BoardGraph) -> list:
    """Check the record invariants; returns violations as data."""
    out = []
    V, E, C = graph.vertices, graph.edges, graph.cells
    nv, ne, nc = len(V), len(E), len(C)

    for i, e in enumerate(E):
        a, b = e.endpoints
        eid = ElementId(SiteType.Edge, i)
        if not (0 <= a < nv and 0 <= b < nv):
            out.append(Violation("InvalidIndex", eid, f"endpoint out of range {e.endpoints}"))
            continue
        if a == b:
            out.append(Violation("DegenerateEdge", eid, "endpoints coincide"))
        if a > b:
            out.append(Violation("EndpointOrder", eid, "endpoints not stored low-first"))
        if len(e.cells) > 2:
            out.append(Violation("EdgeOvercrowded", eid, f"{len(e.cells)} incident cells"))
        for v in (a, b):
            if i not in V[v].edges:
                out.append(Violation("CrossRefMismatch", eid, f"vertex {v} does not list edge {i}"))
        for c in e.cells:
            if not 0 <= c < nc:
                out.append(Violation("InvalidIndex", eid, f"cell {c} out of range"))
            elif i not in C[c].edges:
                out.append(Violation("CrossRefMismatch", eid, f"cell {c} does not list edge {i}"))

    for v, rec in enumerate(V):
        vid = ElementId(SiteType.Vertex, v)
        if not all(math.isfinite(x) for x in rec.position):
            out.append(Violation("NonFinite", vid, "position not finite"))
        angles = []
        for e in rec.edges:
            if not 0 <= e < ne:
                out.append(Violation("InvalidIndex", vid, f"edge {e} out of range"))
                continue
            a, b = E[e].endpoints
            if v not in (a, b):
                out.append(Violation("CrossRefMismatch", vid, f"edge {e} lacks this endpoint"))
                continue
            other = b if a == v else a
            if 0 <= other < nv:
                angles.append(geo.heading(rec.position, V[other].position))
        if any(b <= a for a, b in zip(angles, angles[1:])):
            out.append(Violation("AngularOrder", vid, "incident edges not strictly CCW"))
        for c in rec.cells:
            if not 0 <= c < nc:
                out.append(Violation("InvalidIndex", vid, f"cell {c} out of range"))
            elif v not in C[c].vertices:
                out.append(Violation("CrossRefMismatch", vid, f"cell {c} does not list vertex {v}"))

    for c, rec in enumerate(C):
        cid = ElementId(SiteType.Cell, c)
        n = len(rec.vertices)
        if n < 3 or len(rec.edges) != n:
            out.append(Violation("DegenerateCell", cid,
                                 f"{n} boundary vertices, {len(rec.edges)} boundary edges"))
            continue
        if any(not 0 <= v < nv for v in rec.vertices) or any(not 0 <= e < ne for e in rec.edges):
            out.append(Violation("InvalidIndex", cid, "boundary references a missing element"))
            continue
        for k in range(n):
            a, b = rec.vertices[k], rec.vertices[(k + 1) % n]
            e = rec.edges[k]
            if E[e].endpoints != (min(a, b), max(a, b)):
                out.append(Violation("BoundaryMisaligned", cid, f"edge {e} does not join {a} and {b}"))
            if c not in E[e].cells:
                out.append(Violation("CrossRefMismatch", cid, f"edge {e} does not list cell {c}"))
        for v in rec.vertices:
            if c not in V[v].cells:
                out.append(Violation("CrossRefMismatch", cid, f"vertex {v} does not list cell {c}"))
        pts = [V[v].position for v in rec.vertices]
        if len(set(rec.vertices)) != n:
            out.append(Violation("NonSimpleCell", cid, "repeated boundary vertex"))
        elif geo.signed_area(pts) <= 0:
            out.append(Violation("Orientation", cid, "boundary is not counter-clockwise"))
        cen = geo.mean_point(pts)
        if geo.dist(cen, rec.centroid) > 1e-9:
            out.append(Violation("CentroidMismatch", cid, f"stored {rec.centroid}, actual {cen}"))

    for w in graph.meta.get("warnings", ()):
        out.append(Violation(w, None, "operator produced an empty board", "warning"))
    return out


def errors_only(violations) -> list:
    return [v for v in violations if v.severity == "error"]


def euler_faces(graph: BoardGraph) -> int:
    """V - E + C per the outer-face-excluded convention, summed over components."""
    nv, ne, nc = graph.counts
    return nv - ne + nc
