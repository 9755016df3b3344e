import math
import random

import pytest

from jointtri.conditions import PointSetPair
from jointtri.geom import LabeledSet
from jointtri.triangles import (TriangleSet, edge, enumerate_empty,
                                paired_empty, tri, tri_edges)

from helpers import brute_empty_triangles, convex_position_points

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_tri_canonicalization():
    assert tri(3, 1, 2) == (1, 2, 3)
    assert tri_edges((1, 2, 3)) == ((1, 2), (2, 3), (1, 3))
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        tri(1, 1, 2)


def test_triangle_set_edge_index_invariant():
    rng = random.Random(3)
    tris = {tri(*rng.sample(range(10), 3)) for _ in range(40)}
    ts = TriangleSet(tris)
    assert set(ts) == tris
    # every triangle appears under each of its 3 edges, and nothing else
    seen = {}
    for t in tris:
        for e in tri_edges(t):
            seen.setdefault(e, set()).add(t)
    for e, members in seen.items():
        assert ts.with_edge(e) == members
    assert set(ts.edges()) == set(seen)
    # removal keeps the index exact
    victim = next(iter(tris))
    ts.discard(victim)
    for e in tri_edges(victim):
        assert victim not in ts.with_edge(e)


def test_enumerate_empty_square():
    s = LabeledSet.from_coords(SQUARE)
    assert enumerate_empty(s).sorted_triangles() == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_enumerate_empty_square_plus_center():
    # The center sits on every corner-triple's diagonal edge, so only the
    # four center fans survive; the two opposite-corner triples through
    # the center are collinear and excluded.
    s = LabeledSet.from_coords(SQUARE + [(1, 1)])
    got = enumerate_empty(s).sorted_triangles()
    assert got == [(0, 1, 4), (0, 3, 4), (1, 2, 4), (2, 3, 4)]
    assert got == sorted(brute_empty_triangles(s.points))


def test_enumerate_empty_collinear_set_is_empty():
    s = LabeledSet.from_coords([(0, 0), (1, 1), (2, 2)])
    assert len(enumerate_empty(s)) == 0


def test_enumerate_empty_convex_position_count():
    for n in (4, 6, 9):
        s = LabeledSet.from_coords(convex_position_points(n))
        assert len(enumerate_empty(s)) == math.comb(n, 3)


def test_enumerate_empty_matches_brute_scan():
    rng = random.Random(99)
    for trial in range(60):
        n = rng.randint(4, 12)
        pts = []
        while len(pts) < n:
            p = (rng.randint(0, 15), rng.randint(0, 15))
            if p not in pts:
                pts.append(p)
        s = LabeledSet.from_coords(pts)
        assert set(enumerate_empty(s)) == brute_empty_triangles(pts), pts


def test_point_removal_only_grows_restricted_empty_set():
    rng = random.Random(5)
    for _ in range(20):
        pts = []
        while len(pts) < 9:
            p = (rng.randint(0, 20), rng.randint(0, 20))
            if p not in pts:
                pts.append(p)
        full = set(enumerate_empty(LabeledSet.from_coords(pts)))
        # drop the last point; surviving labels keep their indices
        reduced = set(enumerate_empty(LabeledSet.from_coords(pts[:-1])))
        restricted = {t for t in full if 8 not in t}
        assert restricted <= reduced


def test_paired_empty_identity_and_convexity():
    sq = LabeledSet.from_coords(SQUARE)
    both = paired_empty(PointSetPair(sq, sq))
    assert len(both) == 4
    swapped = LabeledSet.from_coords([(0, 0), (2, 2), (2, 0), (0, 2)])
    assert len(paired_empty(PointSetPair(sq, swapped))) == 4


def test_paired_empty_is_intersection():
    a = LabeledSet.from_coords(SQUARE + [(1, 1)])
    b = LabeledSet.from_coords(convex_position_points(5))
    pair = PointSetPair(a, b)
    got = paired_empty(pair)
    in_a = enumerate_empty(a)
    in_b = enumerate_empty(b)
    assert set(got) == set(in_a) & set(in_b)
    # all of b's triples are empty (convex position), so the pairing is
    # exactly a's empty set
    assert set(got) == set(in_a)
