import math
import random
from fractions import Fraction as F

import pytest

from hellydiam.caps import (
    CapParams,
    acos_bracket,
    build_cover,
    cap_fraction,
    circle_grid,
    cos_bracket,
    cover_contains,
    in_cap,
    in_cap_antipodal,
    is_pythagorean,
    pigeonhole_direction,
    sqrt_bracket,
)


# -- certified scalar brackets -------------------------------------------------

def test_sqrt_bracket():
    lo, hi = sqrt_bracket(F(2))
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo < F(1, 10**15)


def test_cos_bracket_against_math():
    for y in (F(1, 10), F(1, 2), F(1), F(2), F(3)):
        lo, hi = cos_bracket(y)
        assert lo <= F(math.cos(y)).limit_denominator(10**12) <= hi or \
            float(lo) <= math.cos(y) <= float(hi)


def test_acos_bracket_certifies():
    for w in (F(-1, 2), F(0), F(1, 2), F(9, 10)):
        lo, hi = acos_bracket(w)
        assert lo <= hi
        # lo and hi bracket the true angle by the cos tests they passed
        assert cos_bracket(lo)[0] >= w
        assert cos_bracket(hi)[1] <= w


# -- cap_fraction ---------------------------------------------------------------

def test_cap_fraction_circle_third():
    # arccos(1/2)/pi = 1/3 exactly
    got = cap_fraction(CapParams(2, F(1, 2)))
    assert got == F(33, 100)
    assert got <= F(1, 3)


def test_cap_fraction_quarter_circle():
    got = cap_fraction(CapParams(2, 1))
    assert 0 < got <= F(1, 2)


def test_cap_fraction_small_delta_positive():
    for k in (2, 5, 10, 14):
        got = cap_fraction(CapParams(2, F(1, 2 ** k)))
        assert got > 0


def test_cap_fraction_d1():
    assert cap_fraction(CapParams(1, F(1, 2))) == F(1, 2)


def test_cap_fraction_d3_exact():
    # Archimedes: c = delta / 2 exactly on S^2
    assert cap_fraction(CapParams(3, F(1, 2))) == F(1, 4)
    assert cap_fraction(CapParams(3, F(1, 8))) == F(1, 16)


def test_cap_fraction_d4_below_truth():
    got = cap_fraction(CapParams(4, F(1, 2)))
    theta = math.acos(0.5)
    truth = (theta - math.sin(theta) * math.cos(theta)) / math.pi
    assert 0 < float(got) <= truth


def test_cap_fraction_monotone():
    for d in (1, 2, 3, 4):
        vals = [cap_fraction(CapParams(d, F(k, 16))) for k in range(1, 17)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_cap_params_validation():
    with pytest.raises(ValueError):
        CapParams(2, F(3, 2))
    with pytest.raises(ValueError):
        CapParams(0, F(1, 2))


# -- covers ---------------------------------------------------------------------

def test_cover_d1():
    cov = build_cover(CapParams(1, F(1, 3)))
    assert set(cov.directions) == {(F(1),), (F(-1),)}
    assert cov.verified


def test_cover_circle_half():
    cov = build_cover(CapParams(2, F(1, 2)))
    assert cov.verified
    assert len(cov.directions) >= 6
    assert all(is_pythagorean(v) for v in cov.directions)


def test_cover_probe_quality():
    rng = random.Random(11)
    cov = build_cover(CapParams(2, F(1, 50)))
    for _ in range(3000):
        u = (F(rng.randint(-1000, 1000), 1000),
             F(rng.randint(-1000, 1000), 1000))
        if u == (0, 0):
            continue
        assert cover_contains(cov, u)


def test_cover_d3_exists():
    cov = build_cover(CapParams(3, F(1, 2)))
    assert len(cov.directions) >= 2
    rng = random.Random(5)
    hit = 0
    for _ in range(500):
        u = tuple(F(rng.randint(-100, 100), 100) for _ in range(3))
        if all(x == 0 for x in u):
            continue
        hit += any(in_cap(u, v, F(1, 2)) for v in cov.directions)
    assert hit >= 495  # statistical only for d >= 3


# -- pigeonhole -------------------------------------------------------------------

def test_pigeonhole_all_equal():
    dirs = [(F(2), F(2))] * 7
    axis, hits = pigeonhole_direction(dirs, CapParams(2, F(1, 4)))
    assert len(hits) == 7
    assert axis == (F(2), F(2))


def test_pigeonhole_semicircle_count():
    # 12 roughly equally spaced directions on the half circle, delta = 1/2:
    # some axis captures at least ceil(12 * c) of them.
    dirs = circle_grid(6, half=True)
    params = CapParams(2, F(1, 2))
    axis, hits = pigeonhole_direction(dirs, params)
    need = -((-len(dirs) * cap_fraction(params).numerator)
             // cap_fraction(params).denominator)
    assert len(hits) >= 4
    assert len(hits) * cap_fraction(params).denominator >= \
        cap_fraction(params).numerator * len(dirs)


def test_pigeonhole_antipodal_pair():
    axis, hits = pigeonhole_direction([(F(3), F(4)), (F(-3), F(-4))],
                                      CapParams(2, F(1, 4)))
    assert len(hits) == 2


def test_pigeonhole_hard_guarantee_random(rng):
    params = CapParams(2, F(1, 4))
    c = cap_fraction(params)
    for trial in range(30):
        n = rng.randint(1, 25)
        dirs = []
        for _ in range(n):
            u = (F(rng.randint(-50, 50), 10), F(rng.randint(-50, 50), 10))
            if any(u):
                dirs.append(u)
        if not dirs:
            continue
        axis, hits = pigeonhole_direction(dirs, params)
        assert len(hits) >= c * len(dirs)


def test_pigeonhole_negation_invariance(rng):
    params = CapParams(2, F(1, 3))
    dirs = [(F(rng.randint(-20, 20), 4), F(rng.randint(-20, 20), 4))
            for _ in range(10)]
    dirs = [d for d in dirs if any(d)]
    flipped = [tuple(-x for x in d) if i % 2 else d
               for i, d in enumerate(dirs)]
    _, hits1 = pigeonhole_direction(dirs, params)
    _, hits2 = pigeonhole_direction(flipped, params)
    assert len(hits1) == len(hits2)


def test_pigeonhole_pythagorean_only():
    dirs = [(F(1), F(1))] * 5  # |v|^2 = 2: not pythagorean
    axis, hits = pigeonhole_direction(dirs, CapParams(2, F(1, 2)),
                                      pythagorean_only=True)
    assert is_pythagorean(axis)
    assert len(hits) >= 2  # c = 33/100, n = 5


def test_in_cap_antipodal():
    assert in_cap_antipodal((F(-1), F(0)), (F(1), F(0)), F(1, 8))
    assert not in_cap((F(-1), F(0)), (F(1), F(0)), F(1, 8))
