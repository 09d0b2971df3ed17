"""Robust-hull extremes against the brute-force subset oracle."""

import random
from fractions import Fraction as F
from itertools import combinations

from hellydiam.core import MAX, MIN, hull_membership, pt
from hellydiam.linalg import dot
from hellydiam.robust import RobustHull


def brute_contains(vertex_sets, s, z):
    return all(
        hull_membership([p for i in G for p in vertex_sets[i]], z) is not None
        for G in combinations(range(len(vertex_sets)), s))


def _square(rng, span=3):
    cx = F(rng.randint(-span * 4, span * 4), 4)
    cy = F(rng.randint(-span * 4, span * 4), 4)
    w = F(rng.randint(2, 8), 4)
    return [(cx, cy), (cx + w, cy), (cx, cy + w), (cx + w, cy + w)]


def test_intervals_example():
    vs = [[pt(10 * i), pt(10 * i + 1)] for i in range(5)]
    hull = RobustHull(vs, 3)
    lo, hi = hull.width_extremes(pt(1))
    assert (lo, hi) == (pt(20), pt(21))


def test_r_zero_is_union_hull():
    vs = [[pt(0, 0), pt(1, 0)], [pt(0, 1), pt(2, 2)]]
    hull = RobustHull(vs, 2)
    assert hull.extreme(pt(1, 0), MIN) == pt(0, 0)
    assert hull.extreme(pt(1, 0), MAX) == pt(2, 2)


def test_extremes_agree_with_bruteforce():
    from hellydiam.core import ConvexBody, intersect, _feasible
    from hellydiam.errors import EmptyBody

    rng = random.Random(314)
    nonempty_seen = 0
    for _ in range(25):
        n = rng.randint(3, 5)
        s = rng.randint(2, n)
        vs = [_square(rng) for _ in range(n)]
        hull = RobustHull(vs, s)
        v = (F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
        if not any(v):
            v = (F(1), F(0))
        for which in (MIN, MAX):
            try:
                z = hull.extreme(v, which)
            except EmptyBody:
                # cross-check emptiness against the explicit intersection
                bodies = [ConvexBody.from_points(
                    [p for i in G for p in vs[i]])
                    for G in combinations(range(n), s)]
                assert not _feasible(intersect(bodies))
                break
            nonempty_seen += 1
            assert brute_contains(vs, s, z), (vs, s, z)
            # optimality: the point one small step further must leave P
            sense = -1 if which == MIN else 1
            step = tuple(z[k] + sense * F(1, 1000) * v[k] for k in range(2))
            assert not brute_contains(vs, s, step) or \
                dot(v, step) == dot(v, z)
    assert nonempty_seen >= 10


def test_contains_agrees_with_bruteforce():
    rng = random.Random(2718)
    for _ in range(20):
        n = rng.randint(3, 5)
        s = rng.randint(2, n)
        vs = [_square(rng, span=1) for _ in range(n)]
        hull = RobustHull(vs, s)
        for _ in range(6):
            z = (F(rng.randint(-8, 8), 4), F(rng.randint(-8, 8), 4))
            assert hull.contains(z) == brute_contains(vs, s, z)
