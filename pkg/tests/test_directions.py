from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boardforge import AbsoluteDirection as D
from boardforge import RelativeDirection as Rel
from boardforge import SiteType, build, resolve_relative
from boardforge.directions import COMPASS, nearest_wind
from boardforge.errors import UnknownFacing
from boardforge.operators import rotate
from boardforge.tilings import concentric_address

import math

CELL = SiteType.Cell


def test_square_interior_labels():
    g = build("(board (square 8))")
    labels = g.directions.of(CELL, 27)
    assert set(labels) == {D.N, D.NE, D.E, D.SE, D.S, D.SW, D.W, D.NW}
    assert labels[D.N] == 35 and labels[D.E] == 28 and labels[D.SW] == 18


def test_hex_labels_have_no_north():
    g = build("(board (hex 4))")
    labels = g.directions.of(CELL, 18)
    assert set(labels) == {D.E, D.W, D.NNE, D.NNW, D.SSE, D.SSW}


def test_concentric_out_keeps_sector():
    g = build("(board (concentric {4 4}))")
    inner = [c for c in range(g.counts[2]) if concentric_address(g, c)[0] == 0]
    for c in inner:
        out = g.directions.target(CELL, c, D.Out)
        assert out is not None
        assert concentric_address(g, out) == (1, concentric_address(g, c)[1])
        assert g.directions.target(CELL, out, D.In) == c


def test_concentric_cw_steps_back_a_sector():
    g = build("(board (concentric {1 8 8}))")
    for c in range(g.counts[2]):
        ring, sector = concentric_address(g, c)
        if ring == 0:
            assert g.directions.target(CELL, c, D.Out) is None
            continue
        cw = g.directions.target(CELL, c, D.CW)
        assert concentric_address(g, cw) == (ring, (sector - 1) % 8)


def test_rotated_concentric_keeps_rotational_labels():
    g = build("(board (concentric {6 6}))")
    h = rotate(g, 37)
    for c in range(g.counts[2]):
        for d in (D.CW, D.CCW, D.In, D.Out):
            assert h.directions.target(CELL, c, d) == g.directions.target(CELL, c, d)


def test_relative_forward_is_north():
    g = build("(board (square 8))")
    assert resolve_relative(g, CELL, 27, D.N, 0, rel=Rel.Forward) == 35


def test_relative_front_right_after_a_turn():
    g = build("(board (square 8))")
    assert resolve_relative(g, CELL, 27, D.E, 1, rel=Rel.FR) == 20  # row 2, col 4


def test_relative_off_board():
    g = build("(board (square 8))")
    assert resolve_relative(g, CELL, 0, D.N, 0, rel=Rel.Leftward) is None


def test_rotational_facing_refused():
    g = build("(board (square 3))")
    with pytest.raises(UnknownFacing):
        resolve_relative(g, CELL, 4, D.CW, 0)


@pytest.mark.parametrize("rel, offset", [
    (Rel.Forward, 0.0), (Rel.FR, 45.0), (Rel.FRR, 67.5), (Rel.FRRR, 78.75), (Rel.Rightward, 90.0),
    (Rel.BRRR, 101.25), (Rel.BRR, 112.5), (Rel.BR, 135.0), (Rel.Backward, 180.0),
    (Rel.FL, -45.0), (Rel.Leftward, -90.0), (Rel.BLL, -112.5),
])
def test_relative_offsets(rel, offset):
    assert rel.offset == offset


def test_wind_angles():
    assert D.N.degrees == 90.0 and D.E.degrees == 0.0 and D.SSW.degrees == 247.5
    assert nearest_wind(math.radians(44.0)) == (D.NE, pytest.approx(1.0))
    assert D.parse("nne") == D.NNE


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["(board (square 5))", "(board (hex 3))", "(board (tri 4))",
                        "(board (tiling T3464 1))", "(board (concentric {8 8 8}))"]),
       st.sampled_from([0, 15, 60, 90, 133]))
def test_labels_are_injective(src, theta):
    g = rotate(build(src), theta)
    for site in SiteType:
        for i in range(g.count(site)):
            labels = g.directions.of(site, i)
            compass = [j for d, j in labels.items() if d in COMPASS]
            assert len(compass) == len(set(compass))
            adjacent = set(g.relations.neighbors(site, "Adjacent", i)) | set(
                g.relations.neighbors(site, "Orthogonal", i))
            assert set(labels.values()) <= adjacent
