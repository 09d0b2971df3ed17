import random
from fractions import Fraction as F

import pytest

from hellydiam import simplex
from hellydiam.core import (
    MAX,
    MIN,
    ConvexBody,
    Segment,
    colorful_caratheodory_pair,
    diameter,
    diameter_of_points,
    directional_extremum,
    hull_membership,
    in_hull,
    intersect,
    pt,
    radon_partition,
    solve_lp,
    v_width,
    vertices,
)
from hellydiam.errors import DimensionMismatch, EmptyBody, PreconditionFailed, Unbounded
from hellydiam.linalg import dot, sq_dist

from conftest import interval, random_point

UNIT_SQUARE = ConvexBody.box([0, 0], [1, 1])


# -- solve_lp ----------------------------------------------------------------

def test_lp_box_bound():
    out = solve_lp(pt(1, 0), UNIT_SQUARE, MAX)
    assert out.status == simplex.OPTIMAL
    assert out.value == 1
    assert UNIT_SQUARE.contains(out.point)


def test_lp_contradictory_rows():
    body = ConvexBody([(1,), (-1,)], [0, -1])
    assert solve_lp(pt(1), body, MAX).status == simplex.INFEASIBLE


def test_lp_square_diagonal():
    # oracle: enumerate the 4 vertices
    best = max(dot(pt(1, 1), v) for v in vertices(UNIT_SQUARE))
    out = solve_lp(pt(1, 1), UNIT_SQUARE, MAX)
    assert out.value == best == 2
    assert out.point == pt(1, 1)


def test_lp_optimal_point_is_exact():
    out = solve_lp(pt(3, -2), UNIT_SQUARE, MIN)
    assert all(dot(row, out.point) <= rhs
               for row, rhs in zip(UNIT_SQUARE.A, UNIT_SQUARE.b))
    assert dot(pt(3, -2), out.point) == out.value


def test_lp_dimension_mismatch():
    with pytest.raises((DimensionMismatch, ValueError)):
        solve_lp(pt(1), UNIT_SQUARE, MAX)


# -- directional extremum ----------------------------------------------------

def test_extremum_lexicographic_tie_break():
    assert directional_extremum(UNIT_SQUARE, pt(1, 0), MIN) == pt(0, 0)


def test_extremum_unique_vertex():
    assert directional_extremum(UNIT_SQUARE, pt(1, 1), MAX) == pt(1, 1)


def test_extremum_triangle():
    tri = ConvexBody.from_points([pt(0, 0), pt(2, 0), pt(1, 1)])
    assert directional_extremum(tri, pt(0, 1), MAX) == pt(1, 1)


def test_extremum_errors():
    empty = ConvexBody([(1,), (-1,)], [0, -1])
    with pytest.raises(EmptyBody):
        directional_extremum(empty, pt(1), MIN)
    halfline = ConvexBody([(-1,)], [0])
    with pytest.raises(Unbounded):
        directional_extremum(halfline, pt(1), MAX)


# -- v_width -----------------------------------------------------------------

def test_width_axis():
    w = v_width(UNIT_SQUARE, pt(1, 0))
    assert (w.raw_gap, w.v_sq) == (1, 1)


def test_width_diagonal():
    w = v_width(UNIT_SQUARE, pt(1, 1))
    assert (w.raw_gap, w.v_sq) == (2, 2)
    assert w.segment == Segment(pt(0, 0), pt(1, 1))


def test_width_scale_invariant_interval():
    w = v_width(interval(0, 3), pt(2))
    assert (w.raw_gap, w.v_sq) == (6, 4)
    assert w.at_least(3) and not w.at_least(F(301, 100))


def test_width_predicate_scale_invariance(rng):
    body = ConvexBody.box([F(-1, 3), F(1, 7)], [F(5, 2), F(9, 4)])
    for _ in range(50):
        v = random_point(rng, 2)
        if not any(v):
            continue
        c = F(rng.randint(1, 9), rng.randint(1, 9))
        t = F(rng.randint(0, 12), 4)
        w1 = v_width(body, v)
        w2 = v_width(body, tuple(c * x for x in v))
        assert w1.at_least(t) == w2.at_least(t)
        assert w1.segment == w2.segment


# -- intersect ---------------------------------------------------------------

def test_intersect_identity():
    got = intersect([UNIT_SQUARE])
    assert vertices(got) == vertices(UNIT_SQUARE)


def test_intersect_halflines():
    got = intersect([ConvexBody([(1,)], [1]), ConvexBody([(-1,)], [0])])
    assert vertices(got) == [pt(0), pt(1)]


def test_intersect_offset_squares():
    other = ConvexBody.box([F(1, 2), 0], [F(3, 2), 1])
    got = intersect([UNIT_SQUARE, other])
    assert vertices(got) == [pt(F(1, 2), 0), pt(F(1, 2), 1), pt(1, 0), pt(1, 1)]


def test_intersect_empty_list():
    with pytest.raises(ValueError):
        intersect([])


def test_intersect_order_independent(rng):
    bodies = [ConvexBody.box([F(-rng.randint(0, 9), 4), F(-rng.randint(0, 9), 4)],
                             [F(rng.randint(1, 9), 4), F(rng.randint(1, 9), 4)])
              for _ in range(3)]
    forward = vertices(intersect(bodies))
    backward = vertices(intersect(bodies[::-1]))
    assert forward == backward


# -- vertices / diameter -----------------------------------------------------

def test_vertices_square():
    assert vertices(UNIT_SQUARE) == [pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]


def test_vertices_redundant_row():
    body = ConvexBody(list(UNIT_SQUARE.A) + [(1, 0)],
                      list(UNIT_SQUARE.b) + [2])
    assert vertices(body) == vertices(UNIT_SQUARE)


def test_vertices_simplex():
    body = ConvexBody([(-1, 0), (0, -1), (1, 1)], [0, 0, 1])
    assert vertices(body) == [pt(0, 0), pt(0, 1), pt(1, 0)]


def test_vertices_cached():
    body = ConvexBody.box([0, 0], [1, 1])
    assert body.cached_vertices is None
    vertices(body)
    assert body.cached_vertices is not None


def test_diameter_square():
    sq, seg = diameter(UNIT_SQUARE)
    assert sq == 2
    assert seg == Segment(pt(0, 0), pt(1, 1))


def test_diameter_point():
    body = ConvexBody([(1,), (-1,)], [1, -1])
    sq, seg = diameter(body)
    assert sq == 0 and seg.a == seg.b == pt(1)


def test_diameter_rectangle():
    sq, _ = diameter(ConvexBody.box([0, 0], [3, 1]))
    assert sq == 10


def test_diameter_matches_bruteforce(rng):
    for _ in range(25):
        body = ConvexBody.box(
            [F(-rng.randint(0, 8), 4), F(-rng.randint(0, 8), 4)],
            [F(rng.randint(1, 8), 4), F(rng.randint(1, 8), 4)])
        verts = vertices(body)
        best = max(sq_dist(a, b) for a in verts for b in verts)
        assert diameter(body)[0] == best


# -- radon -------------------------------------------------------------------

def test_radon_square_diagonals():
    B, C, point = radon_partition([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)])
    assert (B, C) == ((0, 3), (1, 2))
    assert point == pt(F(1, 2), F(1, 2))


def test_radon_interval():
    B, C, point = radon_partition([pt(0), pt(1), pt(F(1, 2))])
    assert point == pt(F(1, 2))
    assert set(B) | set(C) == {0, 1, 2}


def test_radon_point_in_both_hulls(rng):
    for _ in range(200):
        points = [random_point(rng, 2) for _ in range(4)]
        if len(set(points)) < 4:
            continue
        B, C, point = radon_partition(points)
        assert in_hull([points[i] for i in B], point)
        assert in_hull([points[i] for i in C], point)


# -- hull membership ---------------------------------------------------------

def test_membership_vertex_itself():
    coeffs = hull_membership([pt(0, 0), pt(1, 1)], pt(0, 0))
    assert coeffs == [1, 0]


def test_membership_center():
    coeffs = hull_membership(
        [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)], pt(F(1, 2), F(1, 2)))
    assert coeffs is not None
    assert sum(coeffs) == 1 and all(c >= 0 for c in coeffs)


def test_membership_outside():
    assert hull_membership(
        [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)], pt(2, 0)) is None


# -- colourful Caratheodory for a pair ----------------------------------------

def test_pair_interval_endpoints():
    classes = [[pt(0), pt(1)], [pt(0), pt(1)]]
    sel = colorful_caratheodory_pair(classes, pt(F(1, 4)), pt(F(3, 4)))
    chosen = {classes[k][i][0] for k, i in enumerate(sel)}
    assert chosen == {0, 1}


def test_pair_targets_among_points():
    x, y = pt(0, 0), pt(1, 0)
    tri = [x, y, pt(0, 1), pt(1, 1)]
    sel = colorful_caratheodory_pair([tri] * 4, x, y)
    pts = [tri[i] for i in sel]
    assert in_hull(pts, x) and in_hull(pts, y)


def test_pair_exhaustive_distinct_classes(rng):
    x, y = pt(F(1, 2), F(1, 2)), pt(F(3, 4), F(1, 2))
    base = [pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)]
    classes = []
    for k in range(4):
        cls = list(base)
        cls.append(random_point(rng, 2))
        classes.append(cls)
    sel = colorful_caratheodory_pair(classes, x, y)
    pts = [classes[k][i] for k, i in enumerate(sel)]
    assert in_hull(pts, x) and in_hull(pts, y)


def test_pair_precondition():
    with pytest.raises(PreconditionFailed):
        colorful_caratheodory_pair([[pt(0)], [pt(0)]], pt(0), pt(1))


def test_pair_random_equal_classes(rng):
    for _ in range(60):
        cloud = [random_point(rng, 2) for _ in range(7)]
        x = random_point(rng, 2, span=1)
        y = random_point(rng, 2, span=1)
        if not (in_hull(cloud, x) and in_hull(cloud, y)):
            continue
        sel = colorful_caratheodory_pair([cloud] * 4, x, y)
        pts = [cloud[i] for i in sel]
        assert in_hull(pts, x) and in_hull(pts, y)


# -- segment body -------------------------------------------------------------

def test_segment_body_roundtrip():
    seg = Segment(pt(0, 0), pt(1, 2))
    body = ConvexBody.from_segment(seg)
    assert body.contains(pt(F(1, 2), 1))
    assert not body.contains(pt(F(1, 2), F(9, 8)))
    assert sorted(vertices(body)) == sorted([seg.a, seg.b])


def test_degenerate_segment():
    seg = Segment(pt(1, 1), pt(1, 1))
    assert seg.squared_length == 0
    body = ConvexBody.from_segment(seg)
    assert vertices(body) == [pt(1, 1)]
