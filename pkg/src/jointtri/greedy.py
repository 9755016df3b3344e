"""Greedy construction of a joint triangulation and its exact verifier.

The constructor repeatedly commits one legal triangle and discards every
survivor whose interior overlaps it in either realization, until nothing
is left.  Whether this always tiles both hulls whenever the legal set is
nonempty is an open question, so the result is always re-checked by the
independent verifier and returned with an explicit verdict instead of
being trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .conditions import PointSetPair
from .geom import (CLOSED_MINUS_VERTICES, DegenerateInput, LabeledSet, area2,
                   convex_hull, hull_edge_set, interiors_overlap, orient,
                   orient_sign_tensor, signed_area2, triangle_contains)
from .triangles import Tri, TriangleSet, tri, tri_edges

LEX = "lex"
SEEDED_RANDOM = "random"


@dataclass
class JointTriangulation:
    """A claimed joint triangulation plus its verification verdict."""

    triangles: TriangleSet
    verified: bool
    violation: Optional[str] = None
    choices: list[Tri] | None = None

    def __len__(self) -> int:
        return len(self.triangles)


def _realize(s: LabeledSet, t: Tri):
    i, j, k = t
    return (s[i], s[j], s[k])


def _check_empty(s: LabeledSet, t: Tri, side: str) -> Optional[str]:
    pts = _realize(s, t)
    if orient(*pts) == 0:
        return f"triangle {t} degenerate in {side}"
    for w in range(len(s)):
        if w in t:
            continue
        if triangle_contains(pts, s[w], CLOSED_MINUS_VERTICES):
            return f"corresponding triangle {t} not empty in {side}: contains point {w}"
    return None


def verify_joint(pair: PointSetPair, triangles: Iterable[Tri]) -> Optional[str]:
    """Exact check that a triple set is a joint triangulation of the pair.

    Returns None when every check passes, else a description of the
    first failure.  Checks, in order: each triple nondegenerate and
    empty on both sides; pairwise disjoint interiors on both sides;
    doubled areas summing to each hull's doubled area; shared hull
    edges used exactly once and interior edges exactly twice.
    """
    raw = list(triangles)
    tris = sorted(tri(*t) for t in raw)
    if len(set(tris)) != len(tris):
        dup = next(t for n, t in enumerate(tris) if t in tris[:n])
        return f"duplicate triangle {dup}"
    if not tris:
        return "empty triangle set"

    for t in tris:
        for side, s in (("A", pair.a), ("B", pair.b)):
            msg = _check_empty(s, t, side)
            if msg:
                return msg

    for n, t in enumerate(tris):
        for u in tris[:n]:
            if interiors_overlap(_realize(pair.a, t), _realize(pair.a, u)):
                return f"triangles {u} and {t} overlap in A"
            if interiors_overlap(_realize(pair.b, t), _realize(pair.b, u)):
                return f"triangles {u} and {t} overlap in B"

    try:
        hull_a = convex_hull(pair.a)
        hull_b = convex_hull(pair.b)
    except DegenerateInput as exc:
        return str(exc)
    for side, s, hull in (("A", pair.a, hull_a), ("B", pair.b, hull_b)):
        covered = sum(area2(*_realize(s, t)) for t in tris)
        total = abs(signed_area2([s[i] for i in hull]))
        if covered != total:
            return f"area mismatch in {side}: covered {covered} of {total}"

    edges_a = hull_edge_set(hull_a)
    edges_b = hull_edge_set(hull_b)
    if edges_a != edges_b:
        return "hull edge sets of A and B differ"
    counts: dict[tuple[int, int], int] = {}
    for t in tris:
        for e in tri_edges(t):
            counts[e] = counts.get(e, 0) + 1
    for e in sorted(edges_a):
        if counts.get(e, 0) != 1:
            return f"hull edge {e} used {counts.get(e, 0)} times (want 1)"
    for e in sorted(counts):
        if e not in edges_a and counts[e] != 2:
            return f"interior edge {e} used {counts[e]} times (want 2)"
    return None


def _sat_overlap_mask(d: np.ndarray, arr: np.ndarray, s_arr: np.ndarray,
                      t: Tri, s_t: int) -> np.ndarray:
    """Per-candidate mask: does the candidate's interior meet t's interior
    in the realization whose orientation-sign tensor is d?
    """
    i, j, k = t
    sep = np.zeros(len(arr), dtype=bool)
    for a, b in ((i, j), (j, k), (k, i)):
        row = d[a, b]
        m = (s_t * row[arr[:, 0]] <= 0)
        m &= (s_t * row[arr[:, 1]] <= 0)
        m &= (s_t * row[arr[:, 2]] <= 0)
        sep |= m
    for ca, cb in ((0, 1), (1, 2), (2, 0)):
        va = arr[:, ca]
        vb = arr[:, cb]
        m = np.ones(len(arr), dtype=bool)
        for v in (i, j, k):
            m &= (s_arr * d[va, vb, v] <= 0)
        sep |= m
    return ~sep


def greedy_construct(pair: PointSetPair, legal: TriangleSet,
                     policy: str = LEX, seed: Optional[int] = None) -> JointTriangulation:
    """Build a triangle set greedily from the legal set and verify it.

    Each round commits one surviving triangle (the canonically smallest
    under LEX, or a seeded-uniform pick under SEEDED_RANDOM) and deletes
    every survivor overlapping its interior in either realization; the
    committed triangle overlaps itself and is deleted too.  The result
    is never trusted: ``verified`` reflects the independent verifier,
    and a False verdict is returned, not raised.
    """
    if len(legal) == 0:
        raise ValueError("greedy_construct requires a nonempty legal set")
    if policy not in (LEX, SEEDED_RANDOM):
        raise ValueError(f"unknown policy: {policy!r}")
    arr = np.array(legal.sorted_triangles(), dtype=np.intp)
    da = orient_sign_tensor(pair.a.points)
    db = orient_sign_tensor(pair.b.points)
    sa = da[arr[:, 0], arr[:, 1], arr[:, 2]]
    sb = db[arr[:, 0], arr[:, 1], arr[:, 2]]
    alive = np.ones(len(arr), dtype=bool)
    rng = random.Random(seed) if policy == SEEDED_RANDOM else None
    chosen: list[Tri] = []
    while alive.any():
        live_idx = np.nonzero(alive)[0]
        pick = live_idx[rng.randrange(len(live_idx))] if rng else live_idx[0]
        t: Tri = tuple(int(v) for v in arr[pick])  # type: ignore[assignment]
        chosen.append(t)
        gone = _sat_overlap_mask(da, arr, sa, t, int(sa[pick]))
        gone |= _sat_overlap_mask(db, arr, sb, t, int(sb[pick]))
        alive &= ~gone
    violation = verify_joint(pair, chosen)
    return JointTriangulation(TriangleSet(chosen), violation is None,
                              violation, chosen)
