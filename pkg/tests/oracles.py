"""Independent reference implementations used by the tests.

Nothing here touches the library's cross-reference lists or geometry
helpers. Relations are recomputed from raw polygon and segment
coordinates by exhaustive pairwise comparison, and element counts come
from closed-form formulas.
"""

from __future__ import annotations

import math
from itertools import combinations

TOL = 1e-6


def key(p) -> tuple:
    return (round(p[0], 6) + 0.0, round(p[1], 6) + 0.0)


# ---------------------------------------------------------------------------
# closed-form counts (vertices, edges, cells)

def square_counts(n: int) -> tuple:
    return ((n + 1) ** 2, 2 * n * (n + 1), n * n)


def square_vertex_counts(n: int) -> tuple:
    return (n * n, 2 * n * (n - 1), (n - 1) ** 2)


def hex_counts(n: int) -> tuple:
    """Hexagon of hexagons with n cells per side."""
    return (6 * n * n, 9 * n * n - 3 * n, 3 * n * (n - 1) + 1)


def tri_counts(n: int) -> tuple:
    """Triangle of triangles with n cells per side."""
    return ((n + 1) * (n + 2) // 2, 3 * n * (n + 1) // 2, n * n)


# ---------------------------------------------------------------------------
# raw geometry

def raw_board(graph):
    """(polygons, segments) as plain coordinate tuples."""
    pos = [tuple(v.position) for v in graph.vertices]
    polys = [[pos[v] for v in c.vertices] for c in graph.cells]
    segs = [(pos[e.endpoints[0]], pos[e.endpoints[1]]) for e in graph.edges]
    return polys, segs


def _bisector_angle(prev, here, nxt) -> float:
    """Direction of the interior bisector at ``here`` of a counter-clockwise polygon."""
    out = math.atan2(nxt[1] - here[1], nxt[0] - here[0])
    back = math.atan2(prev[1] - here[1], prev[0] - here[0])
    sweep = (back - out) % (2 * math.pi)
    return out + sweep / 2


def _opposition(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def _best(scored):
    if not scored:
        return []
    top = max(s for s, _ in scored)
    if top <= math.pi / 2 + TOL:
        return []
    return [x for s, x in scored if s >= top - TOL]


def _sides(poly):
    ks = [key(p) for p in poly]
    return {frozenset((ks[i], ks[(i + 1) % len(ks)])) for i in range(len(ks))}


def oracle_relations(polys, segs, max_bridge: float = 2.0) -> dict:
    """Relation sets keyed ``(site, relation)`` with site in vertex/edge/cell.

    Vertices are identified by rounded coordinates, edges by the frozenset of
    their endpoint keys, and cells by their position in ``polys``.
    """
    nc = len(polys)
    corners = [[key(p) for p in poly] for poly in polys]
    sides = [_sides(poly) for poly in polys]
    bis = {}
    for c, poly in enumerate(polys):
        n = len(poly)
        for i in range(n):
            bis[(c, corners[c][i])] = _bisector_angle(poly[i - 1], poly[i], poly[(i + 1) % n])
    seg_keys = [frozenset((key(a), key(b))) for a, b in segs]
    seg_len = {s: math.dist(a, b) for s, (a, b) in zip(seg_keys, segs)}

    # --- cells
    ortho = {c: set() for c in range(nc)}
    touch = {c: set() for c in range(nc)}
    for a, b in combinations(range(nc), 2):
        if sides[a] & sides[b]:
            ortho[a].add(b)
            ortho[b].add(a)
        if set(corners[a]) & set(corners[b]):
            touch[a].add(b)
            touch[b].add(a)
    diag = {c: set() for c in range(nc)}
    for c in range(nc):
        for v in corners[c]:
            scored = [(_opposition(bis[(c, v)], bis[(d, v)]), d)
                      for d in range(nc) if d != c and v in corners[d] and d not in ortho[c]]
            found = _best(scored)
            if not found:
                scored = []
                for s in seg_keys:
                    if v not in s or s in sides[c] or seg_len[s] > max_bridge + 1e-9:
                        continue
                    (w,) = s - {v}
                    for d in range(nc):
                        if d != c and w in corners[d] and v not in corners[d]:
                            scored.append((_opposition(bis[(c, v)], bis[(d, w)]), d))
                found = _best(scored)
            diag[c].update(found)
    for c in range(nc):
        for d in list(diag[c]):
            diag[d].add(c)
    off = {c: touch[c] - ortho[c] - diag[c] for c in range(nc)}
    out = {
        ("cell", "Orthogonal"): ortho,
        ("cell", "Adjacent"): touch,
        ("cell", "Diagonal"): diag,
        ("cell", "OffDiagonal"): off,
        ("cell", "All"): {c: touch[c] | ortho[c] | diag[c] | off[c] for c in range(nc)},
    }

    # --- vertices
    verts = sorted({k for cs in corners for k in cs} | {k for s in seg_keys for k in s})
    vo = {v: set() for v in verts}
    for s in seg_keys:
        a, b = tuple(s)
        vo[a].add(b)
        vo[b].add(a)
    vd = {v: set() for v in verts}
    for v in verts:
        for c in range(nc):
            if v not in corners[c]:
                continue
            scored = [(_opposition(bis[(c, v)], bis[(c, u)]), u)
                      for u in corners[c] if u != v and u not in vo[v]]
            found = _best(scored)
            if not found:
                scored = []
                for side in sides[c]:
                    if v in side:
                        continue
                    for d in range(nc):
                        if d == c or side not in sides[d]:
                            continue
                        for u in corners[d]:
                            if u not in corners[c]:
                                scored.append((_opposition(bis[(c, v)], bis[(d, u)]), u))
                found = _best(scored)
            vd[v].update(found)
    for v in verts:
        for u in list(vd[v]):
            vd[u].add(v)
    out.update({
        ("vertex", "Orthogonal"): vo,
        ("vertex", "Adjacent"): vo,
        ("vertex", "Diagonal"): vd,
        ("vertex", "OffDiagonal"): {v: set() for v in verts},
        ("vertex", "All"): {v: vo[v] | vd[v] for v in verts},
    })

    # --- edges
    eo = {s: set() for s in seg_keys}
    ea = {s: set() for s in seg_keys}
    for s, t in combinations(seg_keys, 2):
        if s & t:
            eo[s].add(t)
            eo[t].add(s)
            ea[s].add(t)
            ea[t].add(s)
        if any(s in sd and t in sd for sd in sides):
            ea[s].add(t)
            ea[t].add(s)
    out.update({
        ("edge", "Orthogonal"): eo,
        ("edge", "Adjacent"): ea,
        ("edge", "Diagonal"): {s: set() for s in seg_keys},
        ("edge", "OffDiagonal"): {s: set() for s in seg_keys},
        ("edge", "All"): ea,
    })
    return out


def oracle_tables_by_index(graph) -> dict:
    """Oracle relations translated to the graph's element indices.

    Returns ``{(site_name, relation_name): [sorted tuple per element]}``.
    """
    polys, segs = raw_board(graph)
    rel = oracle_relations(polys, segs)
    vid = {key(v.position): i for i, v in enumerate(graph.vertices)}
    eid = {frozenset((key(a), key(b))): i for i, (a, b) in enumerate(segs)}
    out = {}
    for (site, name), table in rel.items():
        if site == "cell":
            rows = [tuple(sorted(table[c])) for c in range(len(polys))]
        elif site == "vertex":
            rows = [None] * len(vid)
            for k, ns in table.items():
                rows[vid[k]] = tuple(sorted(vid[u] for u in ns))
        else:
            rows = [None] * len(eid)
            for k, ns in table.items():
                rows[eid[k]] = tuple(sorted(eid[u] for u in ns))
        out[(site, name)] = rows
    return out


def is_boundary_cell(polys, c: int) -> bool:
    """True when some side of cell c belongs to no other cell."""
    others = [_sides(p) for i, p in enumerate(polys) if i != c]
    return any(not any(s in o for o in others) for s in _sides(polys[c]))


# ---------------------------------------------------------------------------
# square-grid arithmetic

def grid_index(row: int, col: int, n: int) -> int:
    """Cell index on an n x n board numbered bottom row first, left to right."""
    return row * n + col


def ray(row: int, col: int, dr: int, dc: int, n: int) -> list:
    out = []
    r, c = row + dr, col + dc
    while 0 <= r < n and 0 <= c < n:
        out.append(grid_index(r, c, n))
        r, c = r + dr, c + dc
    return out


KNIGHT_OFFSETS = [(1, 2), (2, 1), (-1, 2), (-2, 1), (1, -2), (2, -1), (-1, -2), (-2, -1)]


def knight_targets(row: int, col: int, n: int) -> set:
    return {grid_index(row + dr, col + dc, n) for dr, dc in KNIGHT_OFFSETS
            if 0 <= row + dr < n and 0 <= col + dc < n}


def shoelace(poly) -> float:
    return 0.5 * sum(poly[i][0] * poly[(i + 1) % len(poly)][1] - poly[(i + 1) % len(poly)][0] * poly[i][1]
                     for i in range(len(poly)))


def turn_signs(points) -> list:
    """'L'/'R'/'S' for each interior point of a polyline."""
    out = []
    for a, b, c in zip(points, points[1:], points[2:]):
        cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        out.append("L" if cross > 1e-9 else "R" if cross < -1e-9 else "S")
    return out
