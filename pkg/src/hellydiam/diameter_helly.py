"""Fractional and colourful Helly theorems for the diameter.

Both ride on the same pigeonhole: diameters of wide intersections define
directions on the sphere; a cap argument finds one axis capturing a
cap_fraction share of them, and in that direction diameter control becomes
width control, where the fixed-direction machinery takes over.

A segment of length L whose direction lies in the |cos| >= 1-delta cap of
an axis v projects onto v with length at least (1-delta) L, so any body
containing it has v-width at least (1-delta) L.  Conversely a width witness
pair with gap (1-delta)|v| is itself a segment of length >= 1-delta by
Cauchy-Schwarz.  Everything stays in squared rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .caps import CapParams, build_cover, pigeonhole_direction
from .core import Segment, oriented_primitive_vector
from .errors import (
    CoverageUnverified,
    HypothesisFailed,
    InternalError,
    PreconditionFailed,
)
from .intersections import SubsetGeometry
from .linalg import rational_sqrt, sq_norm
from .width_helly import (
    ClassWitness,
    RainbowChoice,
    WidthCounterexample,
    colorful_helly_width,
    fractional_core,
)


@dataclass(frozen=True)
class DiameterWitness:
    segment: Segment
    squared_length: Fraction


@dataclass(frozen=True)
class ColourfulCounterexample:
    choice: RainbowChoice
    diameter_sq: Fraction


@dataclass(frozen=True)
class FracDiamResult:
    witness: DiameterWitness
    members: tuple
    beta_observed: Fraction
    axis: tuple
    good_count: int
    captured_count: int


def fractional_helly_diameter(family, delta, floor=Fraction(1)):
    """Point pair of length >= (1-delta)*floor shared by many members.

    floor scales the hypothesis: every relevant intersection must have
    squared diameter >= floor^2 (the public theorem is floor = 1; the
    transversal pipeline reuses the machinery at floor = 1 - delta/2).
    """
    delta = Fraction(delta)
    floor = Fraction(floor)
    if not (0 < delta < 1):
        raise ValueError("delta must lie in (0,1)")
    n = len(family)
    d = family.dim
    geo = SubsetGeometry(family)
    size = min(2 * d, n)
    floor_sq = floor * floor

    good = []
    dirs = []
    for sub in combinations(range(n), size):
        got = geo.diameter_of(sub)
        if got is not None and got[0] >= floor_sq:
            good.append(sub)
            dirs.append(got[1].direction())
    if not good:
        raise HypothesisFailed("no 2d-subset with a wide intersection")

    axis, hits = pigeonhole_direction(dirs, CapParams(d, delta),
                                      pythagorean_only=True)
    captured = [good[i] for i in hits]
    t = (1 - delta) * floor
    result = fractional_core(family, axis, t, captured)

    seg = result.pair
    sq = seg.squared_length
    if sq < t * t:
        raise InternalError("width witness shorter than the projection bound")
    return FracDiamResult(DiameterWitness(seg, sq), result.members,
                          result.beta_observed, oriented_primitive_vector(axis),
                          len(good), len(captured))


def colorful_helly_diameter(classes, delta):
    """Wide colour class or a rainbow choice with thin intersection.

    Needs 2d * cover_size colour classes (the proof's n' = 2dm); raises
    PreconditionFailed with the required count otherwise.
    """
    delta = Fraction(delta)
    if not classes:
        raise ValueError("need colour classes")
    d = classes[0].dim
    for cls in classes:
        if cls.dim != d or len(cls) == 0:
            raise ValueError("classes must be nonempty and share dimension")
    cover = build_cover(CapParams(d, delta))
    needed = 2 * d * len(cover.directions)
    if len(classes) < needed:
        raise PreconditionFailed(
            f"need at least 2d*|cover| = {needed} classes for delta={delta}",
            detail=needed)

    w = 1 - delta
    thin_sq = w * w
    for k, cls in enumerate(classes):
        geo = SubsetGeometry(cls)
        got = geo.diameter_of(range(len(cls)))
        if got is not None and got[0] >= thin_sq:
            sq, seg = got
            for body in cls.bodies:
                if not (body.contains(seg.a) and body.contains(seg.b)):
                    raise InternalError("class witness escaped its class")
            return ClassWitness(k, DiameterWitness(seg, sq))

    # Every class is thin; assemble the union-of-rainbows counterexample.
    choice = [0] * len(classes)
    for j, axis in enumerate(cover.directions):
        group = list(range(2 * d * j, 2 * d * (j + 1)))
        out = colorful_helly_width([classes[k] for k in group], axis, w)
        if not isinstance(out, WidthCounterexample):
            raise InternalError(
                "a thin class family produced a wide width certificate")
        for pos, k in enumerate(group):
            choice[k] = out.choice.indices[pos]

    bodies = [classes[k][i] for k, i in enumerate(choice)]
    from .intersections import intersection_diameter

    got = intersection_diameter(bodies)
    diam_sq = Fraction(0) if got is None else got[0]
    if diam_sq >= 1:
        raise CoverageUnverified(
            "rainbow intersection stayed wide: the direction grid missed "
            f"its diameter direction {got[1].direction()}")
    return ColourfulCounterexample(RainbowChoice(tuple(choice)), diam_sq)
