import json
import random
from fractions import Fraction as F

from hellydiam import jsonio
from hellydiam.caps import CapParams, build_cover
from hellydiam.core import ConvexBody, Family, Segment, pt


def test_fraction_roundtrip():
    for x in (F(0), F(-7, 3), F(10**12, 10**12 + 1)):
        assert jsonio.frac_in(jsonio.frac_out(x)) == x


def test_body_roundtrip_bit_exact():
    body = ConvexBody.box([F(-1, 3), F(2, 7)], [F(22, 7), F(5, 2)])
    text = jsonio.dump(jsonio.body_out(body))
    back = jsonio.body_in(json.loads(text))
    assert back.A == body.A and back.b == body.b
    assert jsonio.dump(jsonio.body_out(back)) == text


def test_family_roundtrip(rng=None):
    rng = random.Random(8)
    bodies = []
    for _ in range(4):
        lows = [F(rng.randint(-20, 0), 7) for _ in range(2)]
        highs = [lo + F(rng.randint(1, 30), 11) for lo in lows]
        bodies.append(ConvexBody.box(lows, highs))
    fam = Family.of(bodies)
    text = jsonio.dump(jsonio.family_out(fam))
    back = jsonio.family_in(json.loads(text))
    assert jsonio.dump(jsonio.family_out(back)) == text


def test_segment_roundtrip():
    seg = Segment(pt(F(1, 3), F(-2, 5)), pt(F(7, 2), F(0)))
    back = jsonio.segment_in(json.loads(jsonio.dump(jsonio.segment_out(seg))))
    assert back == seg


def test_cover_roundtrip():
    cov = build_cover(CapParams(2, F(1, 2)))
    text = jsonio.dump(jsonio.cover_out(cov))
    back = jsonio.cover_in(json.loads(text))
    assert back.directions == cov.directions
    assert back.params == cov.params
    assert jsonio.dump(jsonio.cover_out(back)) == text
