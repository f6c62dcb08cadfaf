from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boardforge import ElementId, RelationType, SiteType, build
from boardforge.errors import UnknownRelation
from boardforge.relations import BASE_RELATIONS
from boardforge.tilings import SEMIREGULAR, generate_semiregular

import oracles

CELL = SiteType.Cell
R = RelationType


def _centre(g):
    """Cell nearest the middle of the board's bounding box."""
    xs = [p[0] for p in g.positions]
    ys = [p[1] for p in g.positions]
    mid = ((min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2)
    return min(range(g.counts[2]), key=lambda c: (g.cells[c].centroid[0] - mid[0]) ** 2
               + (g.cells[c].centroid[1] - mid[1]) ** 2)


@pytest.mark.parametrize("src, counts", [
    ("(board (square 8))", {R.Orthogonal: 4, R.Adjacent: 8, R.Diagonal: 4, R.OffDiagonal: 0, R.All: 8}),
    ("(board (hex 4))", {R.Orthogonal: 6, R.Adjacent: 6, R.Diagonal: 6, R.OffDiagonal: 0, R.All: 12}),
])
def test_centre_cell_counts(src, counts):
    g = build(src)
    c = _centre(g)
    for rel, n in counts.items():
        assert len(g.relations.neighbors(CELL, rel, c)) == n, rel


def test_tri_upward_cell_orthogonal():
    g = build("(board (tri 4))")
    # the upward triangle in the middle of the second row
    up = [c for c in range(g.counts[2]) if len(g.relations.neighbors(CELL, R.Orthogonal, c)) == 3]
    assert up


def test_hex_diagonals_are_edge_bridged():
    g = build("(board (hex 4))")
    c = _centre(g)
    for d in g.relations.neighbors(CELL, R.Diagonal, c):
        (pivot,) = g.relations.pivot(CELL, c, d)
        assert pivot.site_type == SiteType.Edge
        assert not g.relations.holds(CELL, R.Adjacent, c, d)


def test_square_diagonals_pivot_on_corners():
    g = build("(board (square 3))")
    c = 4
    for d in g.relations.neighbors(CELL, R.Diagonal, c):
        (pivot,) = g.relations.pivot(CELL, c, d)
        assert pivot.site_type == SiteType.Vertex


def test_vertex_relations_on_go_board():
    g = build("(board (square 5) use:Vertex)")
    v = 12  # the centre point
    assert len(g.relations.neighbors(SiteType.Vertex, R.Orthogonal, v)) == 4
    assert g.relations.table(SiteType.Vertex, R.Adjacent) == g.relations.table(SiteType.Vertex, R.Orthogonal)
    assert len(g.relations.neighbors(SiteType.Vertex, R.Diagonal, v)) == 4


def test_edge_relations():
    g = build("(board (square 2) use:Edge)")
    for e in range(g.counts[1]):
        assert g.relations.neighbors(SiteType.Edge, R.Diagonal, e) == ()
        ortho = set(g.relations.neighbors(SiteType.Edge, R.Orthogonal, e))
        assert ortho <= set(g.relations.neighbors(SiteType.Edge, R.Adjacent, e))


def test_relation_parse():
    assert RelationType.parse("offdiagonal") == R.OffDiagonal
    assert RelationType.parse("Off Diagonal") == R.OffDiagonal
    with pytest.raises(UnknownRelation):
        RelationType.parse("Knight")


BOARD_SOURCES = ["(board (square 4))", "(board (hex 3))", "(board (tri 4))", "(board (brick 3 3))",
                 "(board (concentric {1 6 6}))", "(dual (tiling T33434 1))"]


@pytest.mark.parametrize("src", BOARD_SOURCES)
def test_matches_oracle(src):
    g = build(src)
    want = oracles.oracle_tables_by_index(g)
    for site, st_ in (("vertex", SiteType.Vertex), ("edge", SiteType.Edge), ("cell", CELL)):
        for rel in R:
            assert list(g.relations.table(st_, rel)) == want[(site, rel.value)], (site, rel)


@pytest.mark.parametrize("kind", SEMIREGULAR, ids=lambda k: k.name)
def test_semiregular_matches_oracle(kind):
    g = generate_semiregular(kind, 1)
    want = oracles.oracle_tables_by_index(g)
    for rel in R:
        assert list(g.relations.table(CELL, rel)) == want[("cell", rel.value)], rel


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(BOARD_SOURCES + [f"(tiling {k.name} 1)" for k in SEMIREGULAR]))
def test_table_invariants(src):
    g = build(src)
    for site in SiteType:
        for rel in R:
            table = g.relations.table(site, rel)
            for i, row in enumerate(table):
                assert i not in row
                assert list(row) == sorted(set(row))
                for j in row:
                    assert i in table[j]
    for c in range(g.counts[2]):
        o = set(g.relations.neighbors(CELL, R.Orthogonal, c))
        d = set(g.relations.neighbors(CELL, R.Diagonal, c))
        off = set(g.relations.neighbors(CELL, R.OffDiagonal, c))
        adj = set(g.relations.neighbors(CELL, R.Adjacent, c))
        assert not o & d and not off & (o | d)
        assert o <= adj
        vertex_diag = {x for x in d if any(p.site_type == SiteType.Vertex for p in g.relations.pivot(CELL, c, x))}
        assert adj == o | vertex_diag | off
        assert set(g.relations.neighbors(CELL, R.All, c)) == adj | d
        assert g.relations.relations_between(CELL, c, c) == frozenset()
    assert set(BASE_RELATIONS) == set(R) - {R.All}


def test_element_ids_are_tuples():
    assert ElementId(CELL, 3) == (CELL, 3)
