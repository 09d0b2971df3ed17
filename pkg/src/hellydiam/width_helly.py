"""Helly machinery for width in a fixed direction v.

Three results, each as an executable with verified certificates:

* exact Helly: 2d-wise width >= t forces whole-family width >= t, with an
  explicit witness segment;
* colourful Helly: decision between a wide colour class and a thin rainbow
  choice;
* fractional Helly: a frequent (2d-1)-subset whose distinguished point pair
  lies in many family members.

Width thresholds are scale-free: "width >= t" means raw_gap^2 >= t^2 <v,v>.

All polytope-specific care is about flat faces.  Extremal values are pinned
by the d-subset construction, but the witness points are then taken on the
extreme face of the *full* intersection, where they are members of every
body by construction; the d-subset maximizer alone may sit on the wrong end
of a flat face.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import simplex
from .core import (
    MAX,
    MIN,
    ConvexBody,
    Segment,
    _lex_optimum,
    intersect,
    solve_lp,
    v_width,
)
from .errors import GeometryError, HypothesisFailed, InternalError
from .linalg import dot, rational_sqrt, sq_norm


class NonRationalThreshold(GeometryError, ValueError):
    """t * |v| is irrational; use a Pythagorean direction (|v|^2 a perfect
    square) or rescale.  Only the fractional machinery needs this."""


@dataclass(frozen=True)
class WidthWitness:
    segment: Segment
    direction: tuple
    raw_gap: Fraction

    def meets(self, t):
        t = Fraction(t)
        return (self.raw_gap >= 0
                and self.raw_gap ** 2 >= t * t * sq_norm(self.direction))


@dataclass(frozen=True)
class RainbowChoice:
    indices: tuple  # one body index per colour class


@dataclass(frozen=True)
class ClassWitness:
    index: int
    witness: object  # WidthWitness or DiameterWitness


@dataclass(frozen=True)
class WidthCounterexample:
    choice: RainbowChoice
    width: object  # the offending WidthValue


def _offending_subset(family, v, t, max_size):
    """First <=max_size-subset whose intersection is empty or thinner than t."""
    n = len(family)
    for size in range(1, min(max_size, n) + 1):
        for sub in combinations(range(n), size):
            body = intersect([family[i] for i in sub])
            lo = solve_lp(v, body, MIN)
            if lo.status != simplex.OPTIMAL:
                return sub
            hi = solve_lp(v, body, MAX)
            if hi.status != simplex.OPTIMAL:
                return sub
            gap = hi.value - lo.value
            if gap * gap < Fraction(t) ** 2 * sq_norm(v):
                return sub
    return None


def helly_width_witness(family, v, t):
    """Witness segment for: 2d-wise v-width >= t implies family width >= t.

    Implements the proof: the best v-min over d-subset intersections pins
    the extremal level; the witness endpoints are the lexicographic points
    of the full intersection at those levels, verified against every body.
    """
    t = Fraction(t)
    n = len(family)
    d = family.dim
    size = min(d, n)

    best_min = None
    best_max = None
    for sub in combinations(range(n), size):
        body = intersect([family[i] for i in sub])
        lo = solve_lp(v, body, MIN)
        hi = solve_lp(v, body, MAX)
        if lo.status != simplex.OPTIMAL or hi.status != simplex.OPTIMAL:
            raise HypothesisFailed(
                f"a {size}-subset has empty or unbounded intersection",
                detail=sub)
        if best_min is None or lo.value > best_min:
            best_min = lo.value
        if best_max is None or hi.value < best_max:
            best_max = hi.value

    whole = intersect(list(family.bodies))
    try:
        pv, p = _lex_optimum(whole, v, MIN)
        qv, q = _lex_optimum(whole, v, MAX)
    except GeometryError:
        off = _offending_subset(family, v, t, 2 * d)
        raise HypothesisFailed("family intersection lost the hypothesis",
                               detail=off)

    if pv != best_min or qv != best_max:
        # The Helly argument forces equality; a gap means the 2d-wise
        # hypothesis was violated somewhere.
        off = _offending_subset(family, v, t, 2 * d)
        if off is not None:
            raise HypothesisFailed("2d-wise width hypothesis fails",
                                   detail=off)
        raise InternalError("extremal level mismatch without a thin subset")

    gap = qv - pv
    if gap < 0 or gap * gap < t * t * sq_norm(v):
        off = _offending_subset(family, v, t, 2 * d)
        if off is not None:
            raise HypothesisFailed("2d-wise width hypothesis fails",
                                   detail=off)
        raise InternalError("thin conclusion without a thin subset")

    for i, body in enumerate(family.bodies):
        if not (body.contains(p) and body.contains(q)):
            raise InternalError(f"witness endpoint escaped body {i}")
    return WidthWitness(Segment(p, q), tuple(v), gap)


def colorful_helly_width(classes, v, t):
    """Wide colour class or thin rainbow choice, whichever exists.

    classes: list of Family acting as colour classes.  When every rainbow
    intersection is wide, the theorem guarantees (and this returns) a
    ClassWitness; otherwise the exhaustive rainbow search produces an exact
    thin certificate.
    """
    t = Fraction(t)
    if not classes:
        raise ValueError("need at least one colour class")
    for k, cls in enumerate(classes):
        if len(cls) == 0:
            raise ValueError(f"colour class {k} is empty")

    for k, cls in enumerate(classes):
        body = intersect(list(cls.bodies))
        try:
            w = v_width(body, v)
        except GeometryError:
            continue
        if w.at_least(t):
            return ClassWitness(k, WidthWitness(w.segment, tuple(v), w.raw_gap))

    sizes = [len(cls) for cls in classes]
    combo = [0] * len(sizes)
    while True:
        body = intersect([classes[k][i] for k, i in enumerate(combo)])
        w = None
        thin = False
        try:
            w = v_width(body, v)
            thin = not w.at_least(t)
        except GeometryError:
            thin = True  # empty rainbow intersection: width 0 (w stays None)
        if thin:
            return WidthCounterexample(RainbowChoice(tuple(combo)), w)
        k = len(sizes) - 1
        while k >= 0:
            combo[k] += 1
            if combo[k] < sizes[k]:
                break
            combo[k] = 0
            k -= 1
        if k < 0:
            break
    raise InternalError(
        "no wide class and no thin rainbow choice: impossible by the "
        "colourful Helly theorem")


# ---------------------------------------------------------------------------
# Fractional Helly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FracWidthResult:
    pair: Segment
    members: tuple
    beta_observed: Fraction
    chosen_subset: tuple
    good_count: int


def _perturbed(v, j):
    d = len(v)
    return tuple(Fraction(x) + Fraction(1, 1 << (j * (i + 1)))
                 for i, x in enumerate(v))


class _Degenerate(Exception):
    """Perturbation not yet generic for this input; retry finer."""


def _halfspace_data(bodyA, v, vp, m_a, tau):
    """Offset of the containment-minimal vp-halfspace and the witness pair.

    The halfspace {vp . x <= alpha} is minimal such that the cut keeps
    v-width >= tau; alpha is the vp-minimum over the part of the body at
    v-level >= m_a + tau.  Exactness of all the face equalities below is
    what 'vp sufficiently close to v' buys; any failure raises _Degenerate.
    """
    level = m_a + tau
    row_v = [-x for x in v]
    ext_ub = ([list(r) for r in bodyA.A] + [row_v],
              list(bodyA.b) + [-level])
    region = ConvexBody(ext_ub[0], ext_ub[1])
    res = solve_lp(vp, region, MIN)
    if res.status != simplex.OPTIMAL:
        raise _Degenerate("region above the width level is empty")
    alpha = res.value
    if dot(v, res.point) != level:
        raise _Degenerate("vp-minimum left the width level")

    cut = ConvexBody([list(r) for r in bodyA.A] + [list(vp)],
                     list(bodyA.b) + [alpha])
    lo = solve_lp(v, cut, MIN)
    hi = solve_lp(v, cut, MAX)
    if lo.status != simplex.OPTIMAL or hi.status != simplex.OPTIMAL:
        raise _Degenerate("cut lost compactness")
    if lo.value != m_a:
        raise _Degenerate("cut clipped the v-minimum face")
    if hi.value != level:
        raise _Degenerate("cut width is not exactly tau")

    # q must be the unique v-maximum of the cut:
    # that face is {x in bodyA : v.x = level, vp.x = alpha}.
    eq = ([list(v), list(vp)], [level, alpha])
    q_lo = _lex_point(bodyA, eq, MIN)
    q_hi = _lex_point(bodyA, eq, MAX)
    if q_lo != q_hi:
        raise _Degenerate("v-maximum face of the cut is not a point")
    _, p = _lex_optimum(cut, v, MIN)
    return alpha, p, q_lo


def _lex_point(body, extra_eq, sense):
    """Lexicographic extreme point of body restricted by equalities."""
    d = body.dim
    A_ub = [list(r) for r in body.A]
    b_ub = list(body.b)
    eq_rows = [list(r) for r in extra_eq[0]]
    eq_rhs = list(extra_eq[1])
    point = []
    for i in range(d):
        obj = [Fraction(0)] * d
        obj[i] = Fraction(1)
        r = simplex.solve(obj, A_ub=A_ub, b_ub=b_ub,
                          A_eq=eq_rows, b_eq=eq_rhs, sense=sense)
        if r.status != simplex.OPTIMAL:
            raise _Degenerate("lexicographic refinement lost feasibility")
        coord = r.value
        point.append(coord)
        row = [Fraction(0)] * d
        row[i] = Fraction(1)
        eq_rows.append(row)
        eq_rhs.append(coord)
    return tuple(point)


def _dedup_intersect(bodies):
    """Row-concatenation intersection with exact duplicate rows dropped."""
    rows = {}
    dim = bodies[0].dim
    for body in bodies:
        for row, rhs in zip(body.A, body.b):
            rows[(row, rhs)] = None
    return ConvexBody([k[0] for k in rows], [k[1] for k in rows], dim=dim)


def fractional_core(family, v, t, good):
    """Shared engine for the fractional theorems.

    good: the 2d-subsets (index tuples) whose intersections satisfy the
    width predicate at threshold t in direction v.  Returns FracWidthResult.
    Work is keyed on body identity, so copy multisets cost no extra LPs.
    """
    from .core import oriented_primitive_vector

    v = oriented_primitive_vector(v)  # witnesses are scale-invariant in v
    t = Fraction(t)
    tau = rational_sqrt(t * t * sq_norm(v))
    if tau is None:
        raise NonRationalThreshold(
            "t*|v| must be rational: got t^2<v,v> = "
            f"{t * t * sq_norm(v)}")
    if not good:
        raise HypothesisFailed("no wide 2d-subset")
    good = sorted(good)

    def body_key(sub):
        return frozenset(id(family[i]) for i in sub)

    subs_a = sorted({a for b in good for a in combinations(b, len(b) - 1)})

    for j in (16, 32, 64, 128, 256):
        vp = _perturbed(v, j)
        try:
            by_ident = {}
            data = {}
            for a in subs_a:
                key = body_key(a)
                if key not in by_ident:
                    body = _dedup_intersect([family[i] for i in a])
                    lo = solve_lp(v, body, MIN)
                    if lo.status != simplex.OPTIMAL:
                        raise HypothesisFailed(
                            "good subset with empty sub-intersection",
                            detail=a)
                    by_ident[key] = _halfspace_data(body, v, vp, lo.value, tau)
                data[a] = by_ident[key]
        except _Degenerate:
            continue

        counts = {}
        for b in good:
            # containment-maximal halfspace = largest offset; tie-break on
            # the smallest subset index vector.
            best = max(combinations(b, len(b) - 1),
                       key=lambda a: (data[a][0], [-i for i in a]))
            counts[best] = counts.get(best, 0) + 1
        a0 = max(sorted(counts), key=lambda a: counts[a])
        _, p, q = data[a0]
        inside = {}
        for body in family.bodies:
            key = id(body)
            if key not in inside:
                inside[key] = body.contains(p) and body.contains(q)
        members = tuple(i for i, body in enumerate(family.bodies)
                        if inside[id(body)])
        return FracWidthResult(Segment(p, q), members,
                               Fraction(len(members), len(family)),
                               a0, len(good))
    raise InternalError("no perturbation in the ladder was generic")


def fractional_helly_width(family, v, t):
    """Fractional Helly for v-width with the witness pair and its members."""
    t = Fraction(t)
    n = len(family)
    d = family.dim
    size = min(2 * d, n)
    good = []
    for sub in combinations(range(n), size):
        body = intersect([family[i] for i in sub])
        try:
            if v_width(body, v).at_least(t):
                good.append(sub)
        except GeometryError:
            continue
    return fractional_core(family, v, t, good)
