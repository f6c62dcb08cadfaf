from __future__ import annotations

import math
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boardforge import SiteType, build_graph, infer_faces, renumber, validate
from boardforge.errors import DegenerateEdge, NonPlanarInput
from boardforge.graph import ElementId, Site, from_polygons

import oracles

UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RING4 = [(0, 1), (1, 2), (2, 3), (3, 0)]


def lattice(n: int):
    pts = [(x, y) for y in range(n) for x in range(n)]
    edges = [(y * n + x, y * n + x + 1) for y in range(n) for x in range(n - 1)]
    edges += [(y * n + x, (y + 1) * n + x) for y in range(n - 1) for x in range(n)]
    return pts, edges


@pytest.mark.parametrize("points, edges, counts", [
    (UNIT_SQUARE, RING4, (4, 4, 1)),
    ([(0, 0), (1, 0), (0.5, 0.8)], [(0, 1), (1, 2), (2, 0)], (3, 3, 1)),
    (*lattice(3), (9, 12, 4)),
])
def test_build_graph_counts(points, edges, counts):
    g = build_graph(points, edges)
    assert g.counts == counts
    assert validate(g) == []


def test_lattice_cells_are_quads():
    g = build_graph(*lattice(3))
    assert all(len(c.vertices) == 4 for c in g.cells)


def test_path_has_no_cells():
    g = build_graph([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])
    assert g.counts == (3, 2, 0)


def test_hexagon_outline_is_one_cell():
    pts = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]
    g = build_graph(pts, [(k, (k + 1) % 6) for k in range(6)])
    assert g.counts[2] == 1
    assert len(g.cells[0].vertices) == 6


def test_coincident_points_merge():
    g = build_graph([(0, 0), (1, 0), (1, 1), (0, 1), (1e-9, 0)], [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert g.counts == (4, 4, 1)


def test_degenerate_edge():
    with pytest.raises(DegenerateEdge):
        build_graph([(0, 0), (1e-9, 0)], [(0, 1)])


def test_crossing_edges_reported():
    with pytest.raises(NonPlanarInput) as info:
        build_graph(UNIT_SQUARE, [(0, 2), (1, 3)])
    assert info.value.pair is not None


def test_t_junction_split():
    # the middle vertex sits on the long bottom edge
    g = build_graph([(0, 0), (2, 0), (2, 1), (0, 1), (1, 0), (1, 1)],
                    [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
    assert g.counts == (6, 7, 2)


def test_canonical_numbering():
    g = build_graph(*lattice(3))
    keys = [(p[1], p[0]) for p in g.positions]
    assert keys == sorted(keys)
    cen = [(c.centroid[1], c.centroid[0]) for c in g.cells]
    assert cen == sorted(cen)


def test_cells_are_ccw_and_start_low():
    g = build_graph(*lattice(4))
    for c in g.cells:
        assert oracles.shoelace(g.cell_polygon(g.cells.index(c))) > 0
        assert c.vertices[0] == min(c.vertices)


def test_validate_cross_reference_mismatch():
    g = build_graph(*lattice(3))
    e = g.cells[0].edges[0]
    edges = list(g.edges)
    edges[e] = edges[e]._replace(cells=tuple(x for x in edges[e].cells if x != 0))
    bad = replace(g, edges=tuple(edges))
    kinds = [v.kind for v in validate(bad)]
    assert kinds == ["CrossRefMismatch"]


def test_validate_degenerate_cell():
    g = build_graph(UNIT_SQUARE, RING4)
    c = g.cells[0]
    bad = replace(g, cells=(c._replace(vertices=c.vertices[:2], edges=c.edges[:2]),))
    assert "DegenerateCell" in [v.kind for v in validate(bad)]


def test_infer_faces_and_renumber_are_stable():
    g = build_graph(*lattice(4))
    assert infer_faces(g).cells == g.cells
    assert renumber(g).cells == g.cells


def test_nested_component_does_not_make_a_cell():
    outer = [(0, 0), (6, 0), (6, 6), (0, 6)]
    inner = [(2, 2), (3, 2), (3, 3), (2, 3)]
    g = build_graph(outer + inner, RING4 + [(a + 4, b + 4) for a, b in RING4])
    assert g.counts[2] == 1


def test_from_polygons_exact_keeps_only_given_cells():
    ring = [[(0, 0), (3, 0), (3, 1), (0, 1)], [(0, 2), (3, 2), (3, 3), (0, 3)],
            [(0, 1), (1, 1), (1, 2), (0, 2)], [(2, 1), (3, 1), (3, 2), (2, 2)]]
    assert from_polygons(ring).counts[2] == 5
    assert from_polygons(ring, exact=True).counts[2] == 4


def test_element_id_text():
    el = ElementId.parse("Cell:27")
    assert el == (SiteType.Cell, 27) and str(el) == "Cell:27"
    with pytest.raises(ValueError):
        ElementId.parse("Cell")
    with pytest.raises(ValueError):
        Site(-1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.booleans(), min_size=24, max_size=24))
def test_random_lattice_subgraphs_validate(mask):
    pts, edges = lattice(4)
    chosen = [e for e, keep in zip(edges, mask) if keep]
    if not chosen:
        return
    g = build_graph(pts, chosen)
    assert validate(g) == []
    nv, ne, nc = g.counts
    # a face enclosing a separate component is not a cell, so equality holds when connected
    comps = len(g.components())
    assert nv - ne + nc <= comps
    if comps == 1:
        assert nv - ne + nc == 1
