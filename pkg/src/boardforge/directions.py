"""Absolute (compass and rotational) and relative directions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import geometry as geo
from .errors import UnknownFacing
from .graph import BoardGraph, SiteType
from .relations import RelationTable, RelationType
from .tilings import concentric_address

WIND_STEP = 22.5
LABEL_TOLERANCE = 11.25
RELATIVE_TOLERANCE = 22.5


class AbsoluteDirection(Enum):
    N = "N"
    NNE = "NNE"
    NE = "NE"
    ENE = "ENE"
    E = "E"
    ESE = "ESE"
    SE = "SE"
    SSE = "SSE"
    S = "S"
    SSW = "SSW"
    SW = "SW"
    WSW = "WSW"
    W = "W"
    WNW = "WNW"
    NW = "NW"
    NNW = "NNW"
    In = "In"
    Out = "Out"
    CW = "CW"
    CCW = "CCW"
    Adjacent = "Adjacent"
    Orthogonal = "Orthogonal"
    Diagonal = "Diagonal"
    OffDiagonal = "OffDiagonal"
    All = "All"

    @classmethod
    def parse(cls, text: str) -> "AbsoluteDirection":
        for d in cls:
            if d.value.lower() == text.lower():
                return d
        raise ValueError(f"unknown direction {text!r}")

    @property
    def is_compass(self) -> bool:
        return self in COMPASS

    @property
    def is_rotational(self) -> bool:
        return self in ROTATIONAL

    @property
    def degrees(self) -> float:
        """Mathematical angle (E = 0, counter-clockwise); compass winds only."""
        if not self.is_compass:
            raise UnknownFacing(f"{self.value} has no compass angle")
        return (90.0 - WIND_STEP * COMPASS.index(self)) % 360.0


COMPASS = tuple(AbsoluteDirection)[:16]
ROTATIONAL = (AbsoluteDirection.In, AbsoluteDirection.Out, AbsoluteDirection.CW, AbsoluteDirection.CCW)


def nearest_wind(angle: float):
    """(wind, error in degrees) for a step angle in radians."""
    deg = math.degrees(angle) % 360.0
    k = round((90.0 - deg) / WIND_STEP) % 16
    err = abs(geo.angle_diff(math.radians(deg), math.radians(COMPASS[k].degrees)))
    return COMPASS[k], math.degrees(err)


class RelativeDirection(Enum):
    Forward = "Forward"
    FR = "FR"
    FRR = "FRR"
    FRRR = "FRRR"
    Rightward = "Rightward"
    BRRR = "BRRR"
    BRR = "BRR"
    BR = "BR"
    Backward = "Backward"
    BL = "BL"
    BLL = "BLL"
    BLLL = "BLLL"
    Leftward = "Leftward"
    FLLL = "FLLL"
    FLL = "FLL"
    FL = "FL"

    @classmethod
    def parse(cls, text: str) -> "RelativeDirection":
        for d in cls:
            if d.value.lower() == text.lower():
                return d
        raise ValueError(f"unknown relative direction {text!r}")

    @property
    def offset(self) -> float:
        """Clockwise offset from the heading, in degrees (negative = leftward)."""
        return _OFFSETS[self]


_RIGHT = {"Forward": 0.0, "FR": 45.0, "FRR": 67.5, "FRRR": 78.75, "Rightward": 90.0,
          "BRRR": 101.25, "BRR": 112.5, "BR": 135.0, "Backward": 180.0}


def _offset(name: str) -> float:
    if name in _RIGHT:
        return _RIGHT[name]
    return -_RIGHT["Rightward" if name == "Leftward" else name.replace("L", "R")]


_OFFSETS = {d: _offset(d.value) for d in RelativeDirection}


@dataclass(frozen=True)
class DirectionTable:
    """``maps[site_type][i]`` maps each assigned direction to one neighbour index."""

    maps: dict

    def of(self, site_type: SiteType, index: int) -> dict:
        return self.maps[SiteType(site_type)][index]

    def target(self, site_type: SiteType, index: int, direction: AbsoluteDirection):
        return self.maps[SiteType(site_type)][index].get(AbsoluteDirection(direction))

    def label(self, site_type: SiteType, index: int, neighbor: int):
        """Compass label of a step, else its rotational label, else None."""
        found = [d for d, j in self.maps[SiteType(site_type)][index].items() if j == neighbor]
        for d in found:
            if d.is_compass:
                return d
        return found[0] if found else None


def _compass_labels(graph: BoardGraph, st: SiteType, rel: RelationTable) -> list:
    out = []
    for i in range(graph.count(st)):
        here = graph.location(st, i)
        best = {}
        for j in rel.neighbors(st, RelationType.Adjacent, i):
            wind, err = nearest_wind(geo.heading(here, graph.location(st, j)))
            if err >= LABEL_TOLERANCE:
                continue
            if wind not in best or (err, j) < best[wind]:
                best[wind] = (err, j)
        out.append({w: best[w][1] for w in COMPASS if w in best})
    return out


def _rotational_labels(graph: BoardGraph, rel: RelationTable, maps: list):
    info = graph.meta.get("concentric")
    if info is None:
        return
    addr = [concentric_address(graph, c) for c in range(len(graph.cells))]
    k = info["sectors"]
    for c, (ring, sector) in enumerate(addr):
        for d in rel.neighbors(SiteType.Cell, RelationType.Orthogonal, c):
            r2, s2 = addr[d]
            if r2 == ring and s2 == (sector - 1) % k:
                maps[c].setdefault(AbsoluteDirection.CW, d)
            if r2 == ring and s2 == (sector + 1) % k:
                maps[c].setdefault(AbsoluteDirection.CCW, d)
            disc_in = info["disc"] and r2 == 0 and ring == 1
            if r2 == ring - 1 and (s2 == sector or disc_in):
                maps[c].setdefault(AbsoluteDirection.In, d)
            if r2 == ring + 1 and s2 == sector and not (info["disc"] and ring == 0):
                maps[c].setdefault(AbsoluteDirection.Out, d)


def assign_absolute_directions(graph: BoardGraph, relations: RelationTable) -> DirectionTable:
    maps = {st: _compass_labels(graph, st, relations) for st in SiteType}
    _rotational_labels(graph, relations, maps[SiteType.Cell])
    return DirectionTable(maps)


def resolve_relative(graph: BoardGraph, site_type: SiteType, index: int,
                     facing: AbsoluteDirection, rotation: int = 0,
                     relation: RelationType = RelationType.Adjacent,
                     rel: RelativeDirection = RelativeDirection.Forward):
    """Neighbour lying in a relative direction from a piece, or None.

    ``facing`` is the compass direction the piece currently faces;
    ``rotation`` counts the rightward steps that brought it there and is
    already reflected in ``facing``, so targets are measured from
    ``facing``. The candidate nearest the target within 22.5 degrees wins.
    """
    facing = AbsoluteDirection(facing)
    if not facing.is_compass:
        raise UnknownFacing(f"{facing.value} cannot serve as a facing")
    rel = RelativeDirection(rel)
    target = math.radians(facing.degrees - rel.offset)
    here = graph.location(site_type, index)
    best = None
    for j in graph.relations.neighbors(site_type, RelationType(relation), index):
        err = abs(geo.angle_diff(geo.heading(here, graph.location(site_type, j)), target))
        if math.degrees(err) < RELATIVE_TOLERANCE and (best is None or (err, j) < best):
            best = (err, j)
    return None if best is None else best[1]
