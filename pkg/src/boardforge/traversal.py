"""Steps, turtle-style walks and radial precomputation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from . import geometry as geo
from .directions import AbsoluteDirection, DirectionTable
from .geometry import ANGLE_TOL
from .graph import BoardGraph, ElementId, SiteType
from .relations import RelationTable, RelationType

RADIAL_RELATIONS = (RelationType.Orthogonal, RelationType.Diagonal, RelationType.OffDiagonal)
TERMINATE_AT = math.pi / 2.0 - ANGLE_TOL


@dataclass(frozen=True)
class Step:
    from_: ElementId
    to: ElementId
    relations: frozenset
    compass: AbsoluteDirection | None = None


def enumerate_steps(graph: BoardGraph, site_type: SiteType | None = None) -> list:
    """Every ordered related pair of same-type elements with its relation set."""
    st = graph.default_site if site_type is None else SiteType(site_type)
    rel, dirs = graph.relations, graph.directions
    steps = []
    for i in range(graph.count(st)):
        for j in rel.neighbors(st, RelationType.All, i):
            kinds = rel.relations_between(st, i, j)
            label = dirs.label(st, i, j)
            steps.append(Step(ElementId(st, i), ElementId(st, j), kinds,
                              label if label is not None and label.is_compass else None))
    return steps


def _step_angle(graph: BoardGraph, st: SiteType, i: int, j: int) -> float:
    return geo.heading(graph.location(st, i), graph.location(st, j))


# ---------------------------------------------------------------------------
# walks


class WalkToken(Enum):
    F = "F"
    L = "L"
    R = "R"


class Ambiguity(Enum):
    KeepAll = "KeepAll"
    Furthest = "Furthest"


def parse_tokens(text) -> list:
    """Accepts "F,F,R", "{F F R}", "FFR" or a sequence of tokens."""
    if isinstance(text, str):
        parts = [ch for ch in text if ch not in ",{} \t"]
    else:
        parts = list(text)
    return [p if isinstance(p, WalkToken) else WalkToken(str(p).upper()) for p in parts]


@dataclass(frozen=True)
class WalkResult:
    destinations: tuple  # sorted ElementIds
    traces: tuple = field(default=())  # (destination, elements walked from the origin)


def _forward(graph, st, cur, heading, ortho):
    """Best orthogonal steps from ``cur`` along ``heading``; ties are all returned."""
    scored = []
    for j in ortho[cur]:
        a = _step_angle(graph, st, cur, j)
        scored.append((abs(geo.angle_diff(a, heading)), j, a))
    if not scored:
        return []
    best = min(s for s, _, _ in scored)
    if best >= TERMINATE_AT:
        return []
    return [(j, a) for s, j, a in scored if s <= best + ANGLE_TOL]


def _turn(graph, st, cur, heading, ortho, sign):
    """Steps at the next distinct orthogonal angle counter-clockwise (+1) or clockwise (-1)."""
    scored = []
    for j in ortho[cur]:
        a = _step_angle(graph, st, cur, j)
        off = ((a - heading) * sign) % geo.TAU
        if ANGLE_TOL < off < math.pi - ANGLE_TOL:
            scored.append((off, j, a))
    if not scored:
        return []
    best = min(s for s, _, _ in scored)
    return [(j, a) for s, j, a in scored if s <= best + ANGLE_TOL]


def _initial_headings(graph, st, origin, ortho, headings):
    if headings is None or headings == "all" or headings == "All":
        angles = []
        for j in ortho[origin]:
            a = _step_angle(graph, st, origin, j)
            if all(abs(geo.angle_diff(a, b)) > ANGLE_TOL for b in angles):
                angles.append(a)
        return sorted(angles)
    if isinstance(headings, (AbsoluteDirection, str)):
        return [math.radians(AbsoluteDirection(headings).degrees)]
    return [float(h) for h in headings]


def walk(graph: BoardGraph, origin: ElementId, tokens, *, headings="all",
         ambiguity: Ambiguity | str = Ambiguity.KeepAll) -> WalkResult:
    """Run an F/L/R walk over orthogonal steps from ``origin``.

    Each initial heading is walked separately; ties fork the walk. With
    ``Furthest`` only the destinations farthest from the origin survive
    per initial heading. Interpretations with no legal step are dropped.
    """
    st, origin_idx = graph.check_element(ElementId(*origin))
    tokens = parse_tokens(tokens)
    ambiguity = Ambiguity(ambiguity)
    ortho = graph.relations.table(st, RelationType.Orthogonal)
    here = graph.location(st, origin_idx)
    found = {}
    for h in _initial_headings(graph, st, origin_idx, ortho, headings):
        states = [(origin_idx, h, (origin_idx,))]
        for tok in tokens:
            nxt = []
            for cur, heading, trace in states:
                if tok == WalkToken.F:
                    moves = _forward(graph, st, cur, heading, ortho)
                else:
                    moves = _turn(graph, st, cur, heading, ortho, 1 if tok == WalkToken.L else -1)
                nxt.extend((j, a, trace + (j,)) for j, a in moves)
            states = nxt
        if not states:
            continue
        if ambiguity == Ambiguity.Furthest:
            far = max(geo.dist(here, graph.location(st, s[0])) for s in states)
            states = [s for s in states if geo.dist(here, graph.location(st, s[0])) >= far - 1e-9]
        for dest, _, trace in states:
            found.setdefault(dest, []).append(trace)
    dests = tuple(ElementId(st, d) for d in sorted(found))
    traces = tuple((ElementId(st, d), tuple(ElementId(st, x) for x in t))
                   for d in sorted(found) for t in sorted(set(found[d])))
    return WalkResult(dests, traces)


# ---------------------------------------------------------------------------
# radials


@dataclass(frozen=True)
class Radial:
    origin: ElementId
    relation: RelationType
    direction: object  # AbsoluteDirection, or the RelationType when unlabelled
    path: tuple  # ElementIds, origin excluded
    branch: int = 0
    adjacent: bool = True  # first step is also an Adjacent step


@dataclass(frozen=True)
class RadialIndex:
    radials: tuple
    by_origin: dict

    def from_site(self, origin: ElementId, relation: RelationType | None = None,
                  direction: AbsoluteDirection | None = None, directions: DirectionTable | None = None) -> list:
        """Radials leaving ``origin``, filtered by relation and/or direction.

        ``Adjacent`` radials are the orthogonal, off-diagonal and
        vertex-pivoted diagonal ones. A direction matches any radial whose
        first step carries that label in ``directions``.
        """
        out = list(self.by_origin.get(tuple(origin), ()))
        if relation is not None:
            relation = RelationType(relation)
            if relation == RelationType.Adjacent:
                out = [r for r in out if r.adjacent]
            elif relation != RelationType.All:
                out = [r for r in out if r.relation == relation]
        if direction is not None:
            direction = AbsoluteDirection(direction)
            if directions is not None:
                target = directions.target(origin[0], origin[1], direction)
                out = [r for r in out if r.path and r.path[0].index == target]
            else:
                out = [r for r in out if r.direction == direction]
        return out


def generate_radials(graph: BoardGraph, relations: RelationTable, directions: DirectionTable, *,
                     branching: bool = False, site_type: SiteType | None = None,
                     origins: Sequence | None = None) -> RadialIndex:
    """Extend every step as far as it continues with least deviation.

    The heading is the mean direction of the last two steps; extension stops when the
    best continuation deviates by a right angle or more, when none exists,
    or when it would revisit an element already on the radial. With
    branching, equally good continuations fork sibling radials.
    """
    st = graph.default_site if site_type is None else SiteType(site_type)
    locs = [graph.location(st, i) for i in range(graph.count(st))]
    origins = range(graph.count(st)) if origins is None else origins
    out = []
    by_origin = {}
    for o in origins:
        oid = ElementId(st, o)
        mine = []
        for rel in RADIAL_RELATIONS:
            table = relations.table(st, rel)
            for first in table[o]:
                label = directions.label(st, o, first)
                adj = relations.holds(st, RelationType.Adjacent, o, first)
                paths = _extend(locs, table, o, first, branching)
                for b, path in enumerate(paths):
                    mine.append(Radial(oid, rel, label if label is not None else rel,
                                       tuple(ElementId(st, x) for x in path), b, adj))
        by_origin[tuple(oid)] = tuple(mine)
        out.extend(mine)
    return RadialIndex(tuple(out), by_origin)


def _current_heading(locs, seq) -> float:
    """Mean direction of the last two steps (just the step, after the first).

    Smoothing over two steps lets zig-zag radials on triangular grids keep
    alternating L,R once the first tie is broken, while radials that bend
    steadily (around a ring) still follow the bend.
    """
    last = geo.heading(locs[seq[-2]], locs[seq[-1]])
    if len(seq) < 3:
        return last
    before = geo.heading(locs[seq[-3]], locs[seq[-2]])
    return math.atan2(math.sin(last) + math.sin(before), math.cos(last) + math.cos(before))


def _extend(locs, table, origin: int, first: int, branching: bool) -> list:
    done = []
    stack = [[origin, first]]
    while stack:
        seq = stack.pop()
        while True:
            heading = _current_heading(locs, seq)
            cur = seq[-1]
            scored = [(abs(geo.angle_diff(geo.heading(locs[cur], locs[j]), heading)), j) for j in table[cur]]
            if not scored:
                break
            best = min(s for s, _ in scored)
            if best >= TERMINATE_AT:
                break
            ties = sorted(j for s, j in scored if s <= best + ANGLE_TOL)
            if not branching:
                ties = ties[:1]
            live = [j for j in ties if j not in seq]
            if not live:
                break
            # later siblings wait on the stack; depth-first keeps branch ids stable
            for j in reversed(live[1:]):
                stack.append(seq + [j])
            seq.append(live[0])
        done.append(seq[1:])
    return done
