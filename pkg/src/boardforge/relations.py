"""Neighbour tables for the five relation types, per site type.

Cells are orthogonal when they share an edge and adjacent when they share
any vertex. Diagonals use interior-angle bisectors: through a shared
vertex, the cells whose bisectors there are most opposed (and more than a
right angle apart) are diagonal; where no such cell exists, the search
continues across a short edge leaving the vertex. Vertex diagonals are
the same rule with the roles of cell and vertex swapped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from . import geometry as geo
from .errors import UnknownRelation
from .geometry import ANGLE_TOL
from .graph import BoardGraph, ElementId, SiteType

CASE2_MAX_LENGTH = 2.0
RIGHT_ANGLE = math.pi / 2.0


class RelationType(Enum):
    Adjacent = "Adjacent"
    Orthogonal = "Orthogonal"
    Diagonal = "Diagonal"
    OffDiagonal = "OffDiagonal"
    All = "All"

    @classmethod
    def parse(cls, text: str) -> "RelationType":
        key = text.replace("_", "").replace(" ", "").lower()
        for r in cls:
            if r.value.lower() == key:
                return r
        raise UnknownRelation(f"unknown relation {text!r}")


BASE_RELATIONS = (RelationType.Adjacent, RelationType.Orthogonal,
                  RelationType.Diagonal, RelationType.OffDiagonal)


@dataclass(frozen=True)
class RelationTable:
    """``lists[(site_type, relation)][i]`` is the sorted neighbour tuple of element i.

    ``pivots[(site_type, i, j)]`` names the element a diagonal passes through:
    a shared vertex (or cell, for vertices) or a bridging edge.
    """

    lists: dict
    pivots: dict = field(default_factory=dict)

    def neighbors(self, site_type: SiteType, relation: RelationType, index: int) -> tuple:
        return self.lists[(SiteType(site_type), RelationType(relation))][index]

    def table(self, site_type: SiteType, relation: RelationType) -> tuple:
        return self.lists[(SiteType(site_type), RelationType(relation))]

    def holds(self, site_type, relation, i: int, j: int) -> bool:
        return j in self._sets[(SiteType(site_type), RelationType(relation))][i]

    def relations_between(self, site_type, i: int, j: int) -> frozenset:
        return frozenset(r for r in BASE_RELATIONS if self.holds(site_type, r, i, j))

    def pivot(self, site_type, i: int, j: int) -> tuple:
        return self.pivots.get((SiteType(site_type), i, j), ())

    @property
    def _sets(self) -> dict:
        cache = self.__dict__.get("_set_cache")
        if cache is None:
            cache = {k: [frozenset(x) for x in v] for k, v in self.lists.items()}
            object.__setattr__(self, "_set_cache", cache)
        return cache


def _bisectors(graph: BoardGraph) -> dict:
    """(cell, vertex) -> unit interior-angle bisector of that cell at that vertex."""
    out = {}
    pos = graph.positions
    for c, rec in enumerate(graph.cells):
        vs = rec.vertices
        n = len(vs)
        for k, v in enumerate(vs):
            out[(c, v)] = geo.interior_bisector(pos[vs[k - 1]], pos[v], pos[vs[(k + 1) % n]])
    return out


def _best(scored: list) -> list:
    """Items whose opposition is maximal (within tolerance) and beyond a right angle."""
    if not scored:
        return []
    top = max(s for s, _ in scored)
    if top <= RIGHT_ANGLE + ANGLE_TOL:
        return []
    return [item for s, item in scored if s >= top - ANGLE_TOL]


def _sorted_lists(sets) -> tuple:
    return tuple(tuple(sorted(s)) for s in sets)


def _symmetrize(sets, pivots, st):
    for i, s in enumerate(sets):
        for j in list(s):
            if i not in sets[j]:
                sets[j].add(i)
                pivots.setdefault((st, j, i), pivots.get((st, i, j), ()))


def _cell_tables(graph: BoardGraph, bis: dict, pivots: dict):
    nc = len(graph.cells)
    pos = graph.positions
    ortho = [set() for _ in range(nc)]
    for e in graph.edges:
        for a in e.cells:
            for b in e.cells:
                if a != b:
                    ortho[a].add(b)
    touch = [set() for _ in range(nc)]
    for v in graph.vertices:
        for a in v.cells:
            touch[a].update(b for b in v.cells if b != a)

    diag = [set() for _ in range(nc)]
    for c, rec in enumerate(graph.cells):
        cset = set(rec.edges)
        for v in rec.vertices:
            bc = bis[(c, v)]
            scored = [(geo.angle_between(bc, bis[(d, v)]), d)
                      for d in graph.vertices[v].cells if d != c and d not in ortho[c]]
            found = _best(scored)
            for d in found:
                diag[c].add(d)
                pivots.setdefault((SiteType.Cell, c, d), set()).add(ElementId(SiteType.Vertex, v))
            if found:
                continue
            # bridge across an edge leaving v that is not a side of c
            scored = []
            for e in graph.vertices[v].edges:
                if e in cset:
                    continue
                a, b = graph.edges[e].endpoints
                w = b if a == v else a
                if geo.dist(pos[v], pos[w]) > CASE2_MAX_LENGTH + 1e-9:
                    continue
                for d in graph.vertices[w].cells:
                    if d == c or v in graph.cells[d].vertices:
                        continue
                    scored.append((geo.angle_between(bc, bis[(d, w)]), (d, e)))
            for d, e in _best(scored):
                diag[c].add(d)
                pivots.setdefault((SiteType.Cell, c, d), set()).add(ElementId(SiteType.Edge, e))

    _symmetrize(diag, pivots, SiteType.Cell)
    off = [touch[c] - ortho[c] - diag[c] for c in range(nc)]
    adj = touch
    every = [adj[c] | ortho[c] | diag[c] | off[c] for c in range(nc)]
    return {
        RelationType.Adjacent: _sorted_lists(adj),
        RelationType.Orthogonal: _sorted_lists(ortho),
        RelationType.Diagonal: _sorted_lists(diag),
        RelationType.OffDiagonal: _sorted_lists(off),
        RelationType.All: _sorted_lists(every),
    }


def _vertex_tables(graph: BoardGraph, bis: dict, pivots: dict):
    nv = len(graph.vertices)
    ortho = [set(graph.vertex_neighbors(v)) for v in range(nv)]
    diag = [set() for _ in range(nv)]
    for v in range(nv):
        for c in graph.vertices[v].cells:
            rec = graph.cells[c]
            bv = bis[(c, v)]
            scored = [(geo.angle_between(bv, bis[(c, u)]), u)
                      for u in rec.vertices if u != v and u not in ortho[v]]
            found = _best(scored)
            for u in found:
                diag[v].add(u)
                pivots.setdefault((SiteType.Vertex, v, u), set()).add(ElementId(SiteType.Cell, c))
            if found:
                continue
            # across a side of c that does not touch v, into the next cell
            scored = []
            for e in rec.edges:
                if v in graph.edges[e].endpoints:
                    continue
                for d in graph.edges[e].cells:
                    if d == c:
                        continue
                    for u in graph.cells[d].vertices:
                        if u in rec.vertices:
                            continue
                        scored.append((geo.angle_between(bv, bis[(d, u)]), (u, e)))
            for u, e in _best(scored):
                diag[v].add(u)
                pivots.setdefault((SiteType.Vertex, v, u), set()).add(ElementId(SiteType.Edge, e))
    _symmetrize(diag, pivots, SiteType.Vertex)
    empty = tuple(() for _ in range(nv))
    return {
        RelationType.Adjacent: _sorted_lists(ortho),
        RelationType.Orthogonal: _sorted_lists(ortho),
        RelationType.Diagonal: _sorted_lists(diag),
        RelationType.OffDiagonal: empty,
        RelationType.All: _sorted_lists([ortho[v] | diag[v] for v in range(nv)]),
    }


def _edge_tables(graph: BoardGraph):
    ne = len(graph.edges)
    ortho = [set() for _ in range(ne)]
    for v in graph.vertices:
        for a in v.edges:
            ortho[a].update(b for b in v.edges if b != a)
    adj = [set(s) for s in ortho]
    for c in graph.cells:
        for a in c.edges:
            adj[a].update(b for b in c.edges if b != a)
    empty = tuple(() for _ in range(ne))
    return {
        RelationType.Adjacent: _sorted_lists(adj),
        RelationType.Orthogonal: _sorted_lists(ortho),
        RelationType.Diagonal: empty,
        RelationType.OffDiagonal: empty,
        RelationType.All: _sorted_lists(adj),
    }


def compute_relations(graph: BoardGraph) -> RelationTable:
    bis = _bisectors(graph)
    pivots = {}
    lists = {}
    for st, tables in ((SiteType.Vertex, _vertex_tables(graph, bis, pivots)),
                       (SiteType.Edge, _edge_tables(graph)),
                       (SiteType.Cell, _cell_tables(graph, bis, pivots))):
        for rel, tab in tables.items():
            lists[(st, rel)] = tab
    frozen = {k: tuple(sorted(v)) for k, v in pivots.items()}
    return RelationTable(lists, frozen)


def compute_orthogonal(graph: BoardGraph) -> dict:
    return {st: graph.relations.table(st, RelationType.Orthogonal) for st in SiteType}


def compute_adjacent(graph: BoardGraph) -> dict:
    return {st: graph.relations.table(st, RelationType.Adjacent) for st in SiteType}


def compute_diagonal(graph: BoardGraph) -> dict:
    return {st: graph.relations.table(st, RelationType.Diagonal) for st in SiteType}


def compute_off_diagonal(graph: BoardGraph) -> dict:
    return {st: graph.relations.table(st, RelationType.OffDiagonal) for st in SiteType}


def compute_all(graph: BoardGraph) -> dict:
    return {st: graph.relations.table(st, RelationType.All) for st in SiteType}
