"""Small planar-geometry toolkit used across the package.

Points are plain ``(x, y)`` tuples. Bulk tests (vertex-on-segment,
segment crossings) are vectorised with numpy because they are quadratic
in the number of edges.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

MERGE_EPS = 1e-6
ANGLE_TOL = 1e-6

Point = tuple  # (x, y)

TAU = 2.0 * math.pi


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def dist(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def cross(o, a, b) -> float:
    """Z component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def heading(a, b) -> float:
    """Angle of the step a -> b in radians, in [0, 2pi)."""
    return math.atan2(b[1] - a[1], b[0] - a[0]) % TAU


def angle_diff(a: float, b: float) -> float:
    """Signed smallest rotation taking angle b onto angle a, in (-pi, pi]."""
    d = (a - b) % TAU
    if d > math.pi:
        d -= TAU
    return d


def angle_between(u, v) -> float:
    """Unsigned angle between two vectors, in [0, pi]."""
    nu = math.hypot(*u)
    nv = math.hypot(*v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    c = (u[0] * v[0] + u[1] * v[1]) / (nu * nv)
    return math.acos(max(-1.0, min(1.0, c)))


def rotate(v, theta: float):
    c, s = math.cos(theta), math.sin(theta)
    return (v[0] * c - v[1] * s, v[0] * s + v[1] * c)


def mean_point(pts: Sequence) -> tuple:
    n = len(pts)
    return (sum(p[0] for p in pts) / n, sum(p[1] for p in pts) / n)


def signed_area(pts: Sequence) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def interior_bisector(prev, v, nxt):
    """Unit vector bisecting the interior angle at ``v`` of a CCW polygon.

    Handles reflex and straight corners: the interior lies to the left of
    v -> nxt, so the bisector is the direction to ``nxt`` rotated CCW by
    half the interior angle.
    """
    a_next = heading(v, nxt)
    a_prev = heading(v, prev)
    interior = (a_prev - a_next) % TAU
    if interior == 0.0:
        interior = TAU
    b = a_next + interior / 2.0
    return (math.cos(b), math.sin(b))


def point_segment_distance(p, a, b) -> float:
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return dist(p, a)
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / L2
    t = max(0.0, min(1.0, t))
    return math.hypot(p[0] - (ax + t * dx), p[1] - (ay + t * dy))


def point_in_polygon(p, poly: Sequence, eps: float = MERGE_EPS) -> bool:
    """Ray-casting containment; points within ``eps`` of the boundary count as inside."""
    n = len(poly)
    for i in range(n):
        if point_segment_distance(p, poly[i], poly[(i + 1) % n]) < eps:
            return True
    return _crossing_parity(p, poly)


def strictly_inside(p, poly: Sequence, eps: float = MERGE_EPS) -> bool:
    n = len(poly)
    for i in range(n):
        if point_segment_distance(p, poly[i], poly[(i + 1) % n]) < eps:
            return False
    return _crossing_parity(p, poly)


def _crossing_parity(p, poly) -> bool:
    x, y = p
    inside = False
    n = len(poly)
    j = n - 1
    for i in range(n):
        xi, yi = poly[i]
        xj, yj = poly[j]
        if (yi > y) != (yj > y):
            xcross = xi + (y - yi) * (xj - xi) / (yj - yi)
            if x < xcross:
                inside = not inside
        j = i
    return inside


def is_simple_polygon(pts: Sequence) -> bool:
    """True when no two non-adjacent sides touch and no vertex repeats."""
    n = len(pts)
    if n < 3:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if dist(pts[i], pts[j]) < MERGE_EPS:
                return False
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or j == (i + 1) % n:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if segments_touch(a, b, c, d):
                return False
    return True


def segments_touch(a, b, c, d, eps: float = MERGE_EPS) -> bool:
    """Closed-segment intersection test with tolerance."""
    if segments_cross(a, b, c, d, eps):
        return True
    return (point_segment_distance(a, c, d) < eps or point_segment_distance(b, c, d) < eps
            or point_segment_distance(c, a, b) < eps or point_segment_distance(d, a, b) < eps)


def segments_cross(a, b, c, d, eps: float = MERGE_EPS) -> bool:
    """Proper crossing: the segments meet at a point interior to both."""
    la = dist(a, b)
    lc = dist(c, d)
    o1 = cross(a, b, c) / la if la else 0.0
    o2 = cross(a, b, d) / la if la else 0.0
    o3 = cross(c, d, a) / lc if lc else 0.0
    o4 = cross(c, d, b) / lc if lc else 0.0
    return ((o1 > eps and o2 < -eps) or (o1 < -eps and o2 > eps)) and \
        ((o3 > eps and o4 < -eps) or (o3 < -eps and o4 > eps))


def crossing_pairs(pts: np.ndarray, edges: Sequence, eps: float = MERGE_EPS, chunk: int = 256):
    """All pairs (i, j), i < j, of edges that cross properly.

    ``pts`` is an (n, 2) array and ``edges`` a sequence of vertex pairs.
    Edges sharing an endpoint never count as crossing.
    """
    if len(edges) < 2:
        return []
    E = np.asarray(edges, dtype=np.int64)
    A = pts[E[:, 0]]
    B = pts[E[:, 1]]
    D = B - A
    L = np.hypot(D[:, 0], D[:, 1])
    L[L == 0] = 1.0
    lo = np.minimum(A, B) - eps
    hi = np.maximum(A, B) + eps
    out = []
    m = len(E)
    for s in range(0, m, chunk):
        t = min(m, s + chunk)
        # bounding boxes first
        ov = ((lo[s:t, None, 0] <= hi[None, :, 0]) & (lo[None, :, 0] <= hi[s:t, None, 0])
              & (lo[s:t, None, 1] <= hi[None, :, 1]) & (lo[None, :, 1] <= hi[s:t, None, 1]))
        ii, jj = np.nonzero(ov)
        ii = ii + s
        keep = jj > ii
        ii, jj = ii[keep], jj[keep]
        if len(ii) == 0:
            continue
        shared = ((E[ii, 0] == E[jj, 0]) | (E[ii, 0] == E[jj, 1])
                  | (E[ii, 1] == E[jj, 0]) | (E[ii, 1] == E[jj, 1]))
        ii, jj = ii[~shared], jj[~shared]
        if len(ii) == 0:
            continue
        a, d, la = A[ii], D[ii], L[ii]
        c, f, lc = A[jj], D[jj], L[jj]
        o1 = (d[:, 0] * (c[:, 1] - a[:, 1]) - d[:, 1] * (c[:, 0] - a[:, 0])) / la
        o2 = (d[:, 0] * (c[:, 1] + f[:, 1] - a[:, 1]) - d[:, 1] * (c[:, 0] + f[:, 0] - a[:, 0])) / la
        o3 = (f[:, 0] * (a[:, 1] - c[:, 1]) - f[:, 1] * (a[:, 0] - c[:, 0])) / lc
        o4 = (f[:, 0] * (a[:, 1] + d[:, 1] - c[:, 1]) - f[:, 1] * (a[:, 0] + d[:, 0] - c[:, 0])) / lc
        hit = ((((o1 > eps) & (o2 < -eps)) | ((o1 < -eps) & (o2 > eps)))
               & (((o3 > eps) & (o4 < -eps)) | ((o3 < -eps) & (o4 > eps))))
        out.extend(zip(ii[hit].tolist(), jj[hit].tolist()))
    out.sort()
    return out


def vertices_on_edges(pts: np.ndarray, edges: Sequence, eps: float = MERGE_EPS, chunk: int = 256):
    """Map edge index -> vertex indices lying strictly inside that edge (T-junctions)."""
    if len(edges) == 0 or len(pts) == 0:
        return {}
    E = np.asarray(edges, dtype=np.int64)
    A = pts[E[:, 0]]
    B = pts[E[:, 1]]
    D = B - A
    L2 = (D * D).sum(axis=1)
    L2[L2 == 0] = 1.0
    lo = np.minimum(A, B) - eps
    hi = np.maximum(A, B) + eps
    found = {}
    n = len(pts)
    for s in range(0, n, chunk):
        t = min(n, s + chunk)
        P = pts[s:t]
        box = ((P[:, None, 0] >= lo[None, :, 0]) & (P[:, None, 0] <= hi[None, :, 0])
               & (P[:, None, 1] >= lo[None, :, 1]) & (P[:, None, 1] <= hi[None, :, 1]))
        vi, ei = np.nonzero(box)
        if len(vi) == 0:
            continue
        gv = vi + s
        not_end = (E[ei, 0] != gv) & (E[ei, 1] != gv)
        vi, ei, gv = vi[not_end], ei[not_end], gv[not_end]
        if len(vi) == 0:
            continue
        rel = P[vi] - A[ei]
        tt = (rel * D[ei]).sum(axis=1) / L2[ei]
        proj = A[ei] + tt[:, None] * D[ei]
        dd = np.hypot(*(P[vi] - proj).T)
        Ls = np.sqrt(L2[ei])
        hit = (dd < eps) & (tt * Ls > eps) & ((1.0 - tt) * Ls > eps)
        for e, v in zip(ei[hit].tolist(), gv[hit].tolist()):
            found.setdefault(e, []).append(v)
    return found


def regular_polygon(n: int, center=(0.0, 0.0), radius: float = 1.0, start_deg: float = 90.0):
    """CCW vertices of a regular n-gon, first vertex at ``start_deg``."""
    cx, cy = center
    out = []
    for k in range(n):
        a = math.radians(start_deg + 360.0 * k / n)
        out.append((cx + radius * math.cos(a), cy + radius * math.sin(a)))
    return out


def offset_convex(poly: Sequence, delta: float):
    """Grow a convex CCW polygon outward by ``delta`` (parallel sides)."""
    n = len(poly)
    lines = []
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        dx, dy = b[0] - a[0], b[1] - a[1]
        L = math.hypot(dx, dy)
        nx, ny = dy / L, -dx / L  # outward normal for CCW
        lines.append(((a[0] + nx * delta, a[1] + ny * delta), (dx, dy)))
    out = []
    for i in range(n):
        (p, r) = lines[i - 1]
        (q, s) = lines[i]
        den = r[0] * s[1] - r[1] * s[0]
        t = ((q[0] - p[0]) * s[1] - (q[1] - p[1]) * s[0]) / den
        out.append((p[0] + t * r[0], p[1] + t * r[1]))
    return out
