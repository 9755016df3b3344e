"""Independent brute-force reference implementations used as test oracles.

Everything here is written directly against coordinate arithmetic, on
purpose: these functions arbitrate the library's fast paths and must not
share code with them.
"""

from __future__ import annotations

import random
from itertools import combinations


def xorient(p, q, r) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def point_in_closed_triangle(a, b, c, p) -> bool:
    s = xorient(a, b, c)
    if s == 0:
        if xorient(a, b, p) != 0:
            return False
        lo, hi = min(a, b, c), max(a, b, c)
        return min(lo[0], hi[0]) <= p[0] <= max(lo[0], hi[0]) \
            and min(lo[1], hi[1]) <= p[1] <= max(lo[1], hi[1])
    return (s * xorient(a, b, p) >= 0 and s * xorient(b, c, p) >= 0
            and s * xorient(c, a, p) >= 0)


def brute_empty_triangles(points) -> set[tuple[int, int, int]]:
    """All empty triples by the direct all-triples, all-points scan."""
    n = len(points)
    out = set()
    for i, j, k in combinations(range(n), 3):
        a, b, c = points[i], points[j], points[k]
        if xorient(a, b, c) == 0:
            continue
        if any(point_in_closed_triangle(a, b, c, points[w])
               for w in range(n) if w not in (i, j, k)):
            continue
        out.add((i, j, k))
    return out


def _proper_cross(a, b, c, d) -> bool:
    return (xorient(a, b, c) * xorient(a, b, d) < 0
            and xorient(c, d, a) * xorient(c, d, b) < 0)


def _strictly_inside(a, b, c, p) -> bool:
    s = xorient(a, b, c)
    return (xorient(a, b, p) == s and xorient(b, c, p) == s
            and xorient(c, a, p) == s)


def overlap_by_decomposition(t1, t2) -> bool:
    """Interior overlap via crossing + containment decomposition.

    Proper edge crossing, or a vertex of one strictly inside the other,
    or (covering shared-boundary nestings) the tripled centroid of one
    strictly inside the other triangle scaled by three.
    """
    for a, b in ((0, 1), (1, 2), (2, 0)):
        for c, d in ((0, 1), (1, 2), (2, 0)):
            if _proper_cross(t1[a], t1[b], t2[c], t2[d]):
                return True
    for u, v in ((t1, t2), (t2, t1)):
        for p in u:
            if _strictly_inside(v[0], v[1], v[2], p):
                return True
    for u, v in ((t1, t2), (t2, t1)):
        cen = (u[0][0] + u[1][0] + u[2][0], u[0][1] + u[1][1] + u[2][1])
        v3 = tuple((3 * p[0], 3 * p[1]) for p in v)
        if _strictly_inside(v3[0], v3[1], v3[2], cen):
            return True
    return False


def overlap_by_sampling(t1, t2, rng: random.Random, tries: int = 400):
    """Randomized overlap witness: returns True when a sampled point is
    strictly inside both triangles, None when sampling is inconclusive."""
    for _ in range(tries):
        # Random convex combination of t1's vertices, scaled to stay integral.
        w = [rng.randint(1, 97) for _ in range(3)]
        total = sum(w)
        px = sum(wi * p[0] for wi, p in zip(w, t1))
        py = sum(wi * p[1] for wi, p in zip(w, t1))
        scaled1 = tuple((total * p[0], total * p[1]) for p in t1)
        scaled2 = tuple((total * p[0], total * p[1]) for p in t2)
        if _strictly_inside(scaled1[0], scaled1[1], scaled1[2], (px, py)) and \
                _strictly_inside(scaled2[0], scaled2[1], scaled2[2], (px, py)):
            return True
    return None


def brute_diagonal_visible(vertices, i: int, j: int) -> bool:
    """Reference visibility test for a polygon diagonal, O(n) per query.

    True iff the open segment between vertices i and j stays strictly
    inside the polygon: no third vertex on it, no crossing with any
    non-incident boundary edge, midpoint inside (ray parity on doubled
    coordinates).
    """
    n = len(vertices)
    a, b = vertices[i], vertices[j]
    for w in range(n):
        if w in (i, j):
            continue
        p = vertices[w]
        if xorient(a, b, p) == 0 and \
                min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
                min(a[1], b[1]) <= p[1] <= max(a[1], b[1]) and p != a and p != b:
            return False
    for k in range(n):
        k2 = (k + 1) % n
        if k in (i, j) or k2 in (i, j):
            continue
        if _proper_cross(a, b, vertices[k], vertices[k2]):
            return False
    mx, my = a[0] + b[0], a[1] + b[1]
    inside = False
    for k in range(n):
        u = (2 * vertices[k][0], 2 * vertices[k][1])
        v = (2 * vertices[(k + 1) % n][0], 2 * vertices[(k + 1) % n][1])
        if (u[1] > my) == (v[1] > my):
            continue
        side = (v[0] - u[0]) * (my - u[1]) - (v[1] - u[1]) * (mx - u[0])
        if (side > 0) if v[1] > u[1] else (side < 0):
            inside = not inside
    return inside


def convex_position_points(n: int, spread: int = 1):
    """n integer points in strictly convex position (on a parabola)."""
    return [(k, spread * k * k) for k in range(n)]


def convex_polygon_coords(n: int, spread: int = 1):
    """A strictly convex integer polygon (parabola arc closed by its chord);
    no three vertices are collinear."""
    return [(k, spread * k * k) for k in range(n)]
