import random
from fractions import Fraction as F

import pytest

from hellydiam.core import ConvexBody, Family, intersect, pt, v_width
from hellydiam.errors import HypothesisFailed
from hellydiam.width_helly import (
    ClassWitness,
    NonRationalThreshold,
    WidthCounterexample,
    colorful_helly_width,
    fractional_helly_width,
    helly_width_witness,
)

from conftest import core_box_family, interval, interval_family


def test_helly_interval_example():
    # pairwise intersections all have length >= 1; witness must land in [1,2]
    fam = interval_family([(0, 2), (1, 3), (F(1, 2), F(5, 2))])
    w = helly_width_witness(fam, pt(1), 1)
    assert w.segment == type(w.segment)(pt(1), pt(2))
    assert w.raw_gap == 1


def test_helly_single_body():
    fam = Family.of([ConvexBody.box([0, 0], [1, 1])])
    w = helly_width_witness(fam, pt(1, 0), 1)
    assert w.raw_gap == 1
    for body in fam.bodies:
        assert body.contains(w.segment.a) and body.contains(w.segment.b)


def test_helly_planted_strips():
    fam = Family.of([
        ConvexBody.box([F(-i, 10), F(-1, 2)], [1 + F(i, 10), F(1, 2)])
        for i in range(6)])
    w = helly_width_witness(fam, pt(1, 0), 1)
    assert w.raw_gap >= 1
    for body in fam.bodies:
        assert body.contains(w.segment.a) and body.contains(w.segment.b)


def test_helly_endpoints_in_every_member_seeded():
    rng = random.Random(13)
    for _ in range(60):
        fam = core_box_family(rng, rng.randint(2, 7))
        w = helly_width_witness(fam, pt(1, 0), 1)
        gap2 = w.raw_gap * w.raw_gap
        assert gap2 >= 1
        for body in fam.bodies:
            assert body.contains(w.segment.a) and body.contains(w.segment.b)


def test_helly_hypothesis_failure_reports_subset():
    fam = interval_family([(0, 2), (10, 12)])
    with pytest.raises(HypothesisFailed) as info:
        helly_width_witness(fam, pt(1), 1)
    assert info.value.detail is not None


def test_helly_flat_face_tie():
    # The d-subset maximizer can sit on the wrong end of a flat face; the
    # witness must come from the full intersection's extreme face.
    square = ConvexBody.box([0, 0], [1, 1])
    tri = ConvexBody.from_points([pt(1, 0), pt(1, 1), pt(0, 1)])
    fam = Family.of([square, square, tri])
    w = helly_width_witness(fam, pt(0, 1), 1)
    for body in fam.bodies:
        assert body.contains(w.segment.a) and body.contains(w.segment.b)


def test_colorful_all_same_wide():
    cls = Family.of([interval(0, 1)])
    out = colorful_helly_width([cls, cls], pt(1), 1)
    assert isinstance(out, ClassWitness) and out.index == 0


def test_colorful_thin_rainbow():
    classes = [Family.of([interval(0, F(1, 2))]),
               Family.of([interval(10, F(21, 2))])]
    out = colorful_helly_width(classes, pt(1), 1)
    assert isinstance(out, WidthCounterexample)
    bodies = [classes[k][i] for k, i in enumerate(out.choice.indices)]
    w = v_width(intersect(bodies), pt(1))
    assert not w.at_least(1)


def test_colorful_hypothesis_implies_class_witness():
    rng = random.Random(31)
    d = 2
    for _ in range(20):
        classes = [core_box_family(rng, rng.randint(1, 3))
                   for _ in range(2 * d)]
        out = colorful_helly_width(classes, pt(1, 0), 1)
        # every rainbow choice intersects in a core-containing box
        assert isinstance(out, ClassWitness)


def test_fractional_interval_clusters():
    fam = interval_family([(0, 1)] * 5
                          + [(10 + 5 * i, 11 + 5 * i) for i in range(5)])
    out = fractional_helly_width(fam, pt(1), 1)
    assert set(out.members) >= {0, 1, 2, 3, 4}
    assert out.beta_observed >= F(1, 2)


def test_fractional_all_good():
    fam = Family.of([ConvexBody.box([0, 0], [1, 1])] * 5)
    out = fractional_helly_width(fam, pt(1, 0), 1)
    assert out.members == (0, 1, 2, 3, 4)
    assert out.beta_observed == 1


def test_fractional_members_contain_pair_seeded():
    rng = random.Random(47)
    for _ in range(25):
        fam = core_box_family(rng, rng.randint(4, 8))
        out = fractional_helly_width(fam, pt(1, 0), 1)
        for i in out.members:
            assert fam[i].contains(out.pair.a) and fam[i].contains(out.pair.b)
        assert len(out.members) >= 1


def test_fractional_double_counting_floor_seeded():
    # |members| >= good_count / C(n-1, 2d-1) at desk scale
    from math import comb

    rng = random.Random(53)
    for _ in range(15):
        n = rng.randint(4, 10)
        fam = core_box_family(rng, n)
        out = fractional_helly_width(fam, pt(1, 0), 1)
        d = fam.dim
        floor = F(out.good_count, comb(n - 1, 2 * d - 1))
        assert len(out.members) >= floor


def test_fractional_scale_invariance():
    fam = interval_family([(0, 1)] * 3 + [(F(-1, 2), F(3, 2))])
    out1 = fractional_helly_width(fam, pt(1), 1)
    out2 = fractional_helly_width(fam, pt(7), 1)
    assert out1.pair == out2.pair
    assert out1.members == out2.members


def test_fractional_rejects_irrational_threshold():
    fam = Family.of([ConvexBody.box([0, 0], [2, 2])] * 4)
    with pytest.raises(NonRationalThreshold):
        fractional_helly_width(fam, pt(1, 1), 1)


def test_fractional_no_good_subset():
    fam = interval_family([(0, F(1, 4)), (10, F(41, 4))])
    with pytest.raises(HypothesisFailed):
        fractional_helly_width(fam, pt(1), 1)
