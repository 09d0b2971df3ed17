"""JSON wire formats.  Rationals travel as [numerator, denominator] integer
pairs; round trips are bit-exact."""

import json
from fractions import Fraction

from .caps import CapCover, CapParams
from .core import ConvexBody, Family, Segment


def frac_out(x):
    x = Fraction(x)
    return [x.numerator, x.denominator]


def frac_in(pair):
    num, den = pair
    return Fraction(num, den)


def point_out(p):
    return [frac_out(x) for x in p]


def point_in(lst):
    return tuple(frac_in(x) for x in lst)


def body_out(body):
    return {
        "A": [[frac_out(x) for x in row] for row in body.A],
        "b": [frac_out(x) for x in body.b],
    }


def body_in(obj):
    return ConvexBody(
        [tuple(frac_in(x) for x in row) for row in obj["A"]],
        [frac_in(x) for x in obj["b"]],
    )


def family_out(family):
    return {"dim": family.dim, "bodies": [body_out(b) for b in family.bodies]}


def family_in(obj):
    bodies = [body_in(b) for b in obj["bodies"]]
    fam = Family.of(bodies)
    if fam.dim != obj["dim"]:
        raise ValueError("family dim field disagrees with its bodies")
    return fam


def segment_out(seg):
    return {"a": point_out(seg.a), "b": point_out(seg.b)}


def segment_in(obj):
    return Segment(point_in(obj["a"]), point_in(obj["b"]))


def cover_out(cover):
    return {
        "dim": cover.params.dim,
        "delta": frac_out(cover.params.delta),
        "directions": [point_out(v) for v in cover.directions],
        "verified": cover.verified,
        "packing_bound": cover.packing_bound,
    }


def cover_in(obj):
    return CapCover(
        CapParams(obj["dim"], frac_in(obj["delta"])),
        tuple(point_in(v) for v in obj["directions"]),
        obj.get("verified", False),
        obj.get("packing_bound", 0),
    )


def dump(obj, fp=None, **kwargs):
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"), **kwargs)
    if fp is None:
        return text
    fp.write(text)
    return None


def load(text):
    return json.loads(text)
