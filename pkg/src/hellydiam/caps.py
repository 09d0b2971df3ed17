"""Spherical caps: certified measure lower bounds, covers, pigeonholing.

The cap around x at parameter delta is C_delta(x) = {y : <x,y> >= 1-delta}
on the unit sphere (everything here is stated scale-free through squared
inner products, so directions never need normalizing).  c_delta denotes the
cap's share of the sphere under the rotation-invariant probability measure.

cap_fraction returns a *certified rational lower bound* on c_delta.  All
certificates are pure rational arithmetic: a hardcoded pi enclosure,
alternating-series brackets for cos, and integer-sqrt brackets for square
roots.  Floats appear only as search hints, never in a certificate.

Cover directions are Pythagorean (squared norm a perfect rational square),
which downstream modules rely on to keep threshold arithmetic rational.
"""

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .core import primitive_vector
from .errors import CoverageUnverifiedWarning, DimensionMismatch
from .linalg import dot, sq_norm

F0 = Fraction(0)
F1 = Fraction(1)

# Continued-fraction convergents bracketing pi.
PI_LO = Fraction(103993, 33102)
PI_HI = Fraction(104348, 33215)


# ---------------------------------------------------------------------------
# Certified scalar brackets
# ---------------------------------------------------------------------------

def sqrt_bracket(x, bits=64):
    """Rational (lo, hi) with lo <= sqrt(x) <= hi for x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative")
    if x == 0:
        return F0, F0
    n = x.numerator * x.denominator
    scale = x.denominator << bits
    r = math.isqrt(n << (2 * bits))
    return Fraction(r, scale), Fraction(r + 1, scale)


def cos_bracket(y, terms=12):
    """Rational (lo, hi) around cos(y) for 0 <= y <= PI_HI.

    Alternating Taylor series; the error after m terms is at most the first
    omitted term once terms decrease, which holds from the second term on
    for y < sqrt(12).
    """
    if y < 0 or y > PI_HI:
        raise ValueError("cos_bracket domain is [0, pi]")
    y2 = y * y
    term = F1
    s = F1
    for k in range(1, terms):
        term = -term * y2 / ((2 * k - 1) * (2 * k))
        s += term
    tail = abs(term) * y2 / ((2 * terms - 1) * (2 * terms))
    return s - tail, s + tail


def acos_bracket(w, snap_bits=28):
    """Rational (lo, hi) with lo <= arccos(w) <= hi, for -1 < w <= 1.

    A float guess is snapped to a dyadic grid and then widened until the
    alternating-series cos bounds certify both sides.
    """
    w = Fraction(w)
    if w == 1:
        return F0, F0
    if not (-1 < w < 1):
        raise ValueError("acos_bracket domain is (-1, 1]")
    guess = math.acos(max(-1.0, min(1.0, float(w))))
    grid = 1 << snap_bits
    center = Fraction(int(guess * grid), grid)
    eps = Fraction(1, grid)

    lo = max(F0, center - eps)
    while lo > 0 and cos_bracket(lo)[0] < w:
        eps *= 2
        lo = max(F0, center - eps)
    eps = Fraction(1, grid)
    hi = min(PI_HI, center + eps)
    while hi < PI_HI and cos_bracket(hi)[1] > w:
        eps *= 2
        hi = min(PI_HI, center + eps)
    return lo, hi


@dataclass(frozen=True)
class Ival:
    """Closed rational interval; rounding is always outward."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, x):
        x = Fraction(x)
        return cls(x, x)

    def __add__(self, other):
        other = _ival(other)
        return Ival(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        other = _ival(other)
        return Ival(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other):
        other = _ival(other)
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Ival(min(prods), max(prods))

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ival(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval division through zero")
        recips = (1 / other.lo, 1 / other.hi)
        return self * Ival(min(recips), max(recips))

    def power(self, k):
        out = Ival.point(1)
        for _ in range(k):
            out = out * self
        return out


def _ival(x):
    return x if isinstance(x, Ival) else Ival.point(x)


def _sin_power_integral(k, theta, sin_t, cos_t):
    """Interval enclosure of the integral of sin^k over [0, theta].

    Recursion: S_k = (-cos * sin^(k-1) + (k-1) S_{k-2}) / k with S_0 = theta
    and S_1 = 1 - cos(theta).
    """
    table = [theta, Ival.point(1) - cos_t]
    for j in range(2, k + 1):
        boundary = (Ival.point(0) - cos_t) * sin_t.power(j - 1)
        table.append((boundary + (j - 1) * table[j - 2]) * Fraction(1, j))
    return table[k]


def _sin_power_integral_full(k):
    """Interval enclosure of the integral of sin^k over [0, pi]."""
    table = [Ival(PI_LO, PI_HI), Ival.point(2)]
    for j in range(2, k + 1):
        table.append(table[j - 2] * Fraction(j - 1, j))
    return table[k]


def _floor_rationalize(x, start_den=100):
    """Largest multiple of 1/D at or below x, escalating D until positive."""
    if x <= 0:
        raise ValueError("need a positive value to rationalize")
    den = start_den
    while x * den < 1:
        den *= 10
    return Fraction(int(x * den), den)


# ---------------------------------------------------------------------------
# Cap parameters and measure bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapParams:
    """Sphere S^(d-1) plus the cap parameter delta in (0, 1]."""

    dim: int
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if not (0 < self.delta <= 1):
            raise ValueError("delta must lie in (0, 1]")


@lru_cache(maxsize=None)
def _cap_fraction_cached(dim, delta):
    if dim == 1:
        # S^0 is two atoms of measure 1/2; the cap is exactly {x}.
        return Fraction(1, 2)
    w = 1 - delta
    if dim == 2:
        if w == 0:
            return Fraction(1, 2)
        th_lo, _ = acos_bracket(w)
        return _floor_rationalize(th_lo / PI_HI)
    if dim == 3:
        # Archimedes: the cap's share is its height over the total height.
        return delta / 2
    th_lo, th_hi = acos_bracket(w)
    theta = Ival(th_lo, th_hi)
    s2 = 1 - w * w
    s_lo, s_hi = sqrt_bracket(s2)
    sin_t = Ival(s_lo, min(s_hi, F1))
    cos_t = Ival.point(w)
    num = _sin_power_integral(dim - 2, theta, sin_t, cos_t)
    den = _sin_power_integral_full(dim - 2)
    return _floor_rationalize(num.lo / den.hi)


def cap_fraction(params):
    """Certified rational lower bound on the cap measure c_delta."""
    return _cap_fraction_cached(params.dim, params.delta)


# ---------------------------------------------------------------------------
# Exact angular predicates (all scale-free)
# ---------------------------------------------------------------------------

def cos_angle_ge(u, v, gamma):
    """Exact test of  <u,v>/(|u||v|) >= gamma  for rational gamma."""
    inner = dot(u, v)
    bound2 = gamma * gamma * sq_norm(u) * sq_norm(v)
    if gamma >= 0:
        return inner >= 0 and inner * inner >= bound2
    return inner >= 0 or inner * inner <= bound2


def cos_angle_le(u, v, gamma):
    """Exact test of  <u,v>/(|u||v|) <= gamma."""
    inner = dot(u, v)
    bound2 = gamma * gamma * sq_norm(u) * sq_norm(v)
    if gamma >= 0:
        return inner <= 0 or inner * inner <= bound2
    return inner <= 0 and inner * inner >= bound2


def in_cap(u, axis, delta):
    """u inside C_delta(axis), both unnormalized."""
    return cos_angle_ge(u, axis, 1 - Fraction(delta))


def in_cap_antipodal(u, axis, delta):
    """u or -u inside C_delta(axis): |cos angle| >= 1 - delta."""
    gamma = 1 - Fraction(delta)
    inner = dot(u, axis)
    return inner * inner >= gamma * gamma * sq_norm(u) * sq_norm(axis)


def is_pythagorean(v):
    """True when <v,v> is the square of a rational."""
    n = sq_norm(v)
    rn = math.isqrt(n.numerator)
    rd = math.isqrt(n.denominator)
    return rn * rn == n.numerator and rd * rd == n.denominator


# ---------------------------------------------------------------------------
# Direction grids (all Pythagorean)
# ---------------------------------------------------------------------------

def circle_grid(per_quadrant, half=False):
    """Rational directions around S^1 in increasing-angle order.

    Tangent half-angle parametrization: t = i/N sweeps one quadrant, the
    rest comes from exact 90-degree rotations.  Every direction has squared
    norm (1 + t^2)^2, a perfect square.  Consecutive angular gaps are at
    most 2/N radians.  half=True emits only [0, pi).
    """
    N = per_quadrant
    quad = []
    for i in range(N):
        t = Fraction(i, N)
        quad.append((1 - t * t, 2 * t))
    out = list(quad)
    out += [(-y, x) for (x, y) in quad]
    if not half:
        out += [(-x, -y) for (x, y) in quad]
        out += [(y, -x) for (x, y) in quad]
    return out


def sphere_grid(dim, side):
    """Stereographic rational grid on S^(d-1) (squared norms are squares)."""
    if dim == 1:
        return [(F1,), (Fraction(-1),)]
    if dim == 2:
        return circle_grid(max(side, 2))
    coords = [Fraction(i, side) for i in range(-side, side + 1)]
    dirs = []

    def rec(prefix):
        if len(prefix) == dim - 1:
            a = tuple(prefix)
            na = sum(x * x for x in a)
            dirs.append(tuple(2 * x for x in a) + (1 - na,))
            return
        for c in coords:
            rec(prefix + [c])

    rec([])
    dirs.append(tuple([F0] * (dim - 1)) + (Fraction(-1),))
    return dirs


# ---------------------------------------------------------------------------
# Cover construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapCover:
    params: CapParams
    directions: tuple
    verified: bool
    packing_bound: int = 0  # floor(1 / cap_fraction(delta/4)), reported only

    def __len__(self):
        return len(self.directions)


def _packed_subset(grid, gamma_pack):
    """Greedy maximal packing: keep directions whose pairwise angle is at
    least 2*theta_{delta/4}, i.e. cos <= gamma_pack."""
    kept = []
    for v in grid:
        if all(cos_angle_le(v, u, gamma_pack) for u in kept):
            kept.append(v)
    return kept


def _verify_circle_cover(dirs, gamma_cov):
    """Exact check that consecutive angular gaps are at most 2*theta_delta.

    dirs must be in increasing angle order around the full circle.
    """
    n = len(dirs)
    if n < 2:
        return False
    for i in range(n):
        if not cos_angle_ge(dirs[i], dirs[(i + 1) % n], gamma_cov):
            return False
    return True


@lru_cache(maxsize=None)
def _build_cover_cached(dim, delta):
    params = CapParams(dim, delta)
    quarter = CapParams(dim, delta / 4)
    cfrac = cap_fraction(quarter)
    packing_bound = int(1 / cfrac)
    # cos(2*theta) = 2*cos(theta)^2 - 1 keeps both thresholds rational.
    w4 = 1 - delta / 4
    gamma_pack = 2 * w4 * w4 - 1
    w = 1 - delta
    gamma_cov = 2 * w * w - 1

    if dim == 1:
        return CapCover(params, ((F1,), (Fraction(-1),)), True, packing_bound)

    if dim == 2:
        th_lo, _ = acos_bracket(w)
        th4_lo, th4_hi = acos_bracket(w4)
        slack = th_lo - 2 * th4_hi
        if slack <= 0:
            slack = th4_lo  # certificate margin lost to rounding; fall back
        per_quadrant = max(8, int(1 / slack) + 1)
        for _ in range(6):
            grid = circle_grid(per_quadrant)
            kept = _packed_subset(grid, gamma_pack)
            if _verify_circle_cover(kept, gamma_cov):
                return CapCover(params, tuple(kept), True, packing_bound)
            per_quadrant *= 2
        warnings.warn("circle cover could not be certified",
                      CoverageUnverifiedWarning)
        return CapCover(params, tuple(kept), False, packing_bound)

    # d >= 3: greedy packing over a stereographic grid; covering quality is
    # only sampled, never certified (reported via verified=False).
    th4_lo, _ = acos_bracket(w4)
    side = max(3, int(2 / th4_lo) + 1)
    grid = sphere_grid(dim, side)
    kept = _packed_subset(grid, gamma_pack)
    probe_misses = _sample_cover_misses(kept, dim, delta, trials=2000, seed=7)
    if probe_misses:
        warnings.warn(
            f"sphere cover missed {len(probe_misses)} of 2000 probes",
            CoverageUnverifiedWarning)
    return CapCover(params, tuple(kept), False, packing_bound)


def build_cover(params):
    """Greedy delta/4-packing turned delta-cover (certified exactly on the
    circle, statistically elsewhere)."""
    return _build_cover_cached(params.dim, params.delta)


def cover_contains(cover, u):
    """Exact test that u lies in some cover cap.

    A float ranking picks the likely axis first; the decision itself is the
    exact squared predicate, with a full exact scan as fallback.
    """
    delta = cover.params.delta
    uf = [float(x) for x in u]
    nu = math.sqrt(sum(x * x for x in uf)) or 1.0
    best = None
    best_val = -2.0
    for v in cover.directions:
        vf = [float(x) for x in v]
        nv = math.sqrt(sum(x * x for x in vf)) or 1.0
        val = sum(a * b for a, b in zip(uf, vf)) / (nu * nv)
        if val > best_val:
            best_val = val
            best = v
    if best is not None and in_cap(u, best, delta):
        return True
    return any(in_cap(u, v, delta) for v in cover.directions)


def _sample_cover_misses(dirs, dim, delta, trials, seed):
    import random

    rng = random.Random(seed)
    misses = []
    for _ in range(trials):
        u = tuple(Fraction(rng.randint(-1000, 1000), 1000)
                  for _ in range(dim))
        if all(x == 0 for x in u):
            continue
        if not any(in_cap(u, v, delta) for v in dirs):
            misses.append(u)
    return misses


# ---------------------------------------------------------------------------
# Pigeonhole
# ---------------------------------------------------------------------------

def pigeonhole_direction(dirs, params, pythagorean_only=False):
    """Axis capturing at least cap_fraction(params) of the direction set.

    Directions count as antipodal pairs: a hit is |cos angle| >= 1 - delta.
    Candidate axes are the deduplicated inputs plus the cover directions;
    if those fall short (possible: the cover is built for a different query)
    a probe grid fine enough for the measure argument settles it exactly on
    the circle.  For d >= 3 the probe fallback is heuristic and warns.
    """
    dirs = [tuple(Fraction(x) for x in u) for u in dirs]
    if not dirs:
        raise ValueError("need at least one direction")
    d = params.dim
    for u in dirs:
        if len(u) != d:
            raise DimensionMismatch("direction dimension mismatch")
        if all(x == 0 for x in u):
            raise ValueError("zero direction")
    delta = params.delta
    n = len(dirs)
    c = cap_fraction(params)
    target = c * n  # hit count must reach this (Fraction compare)

    def hits_of(axis):
        return [i for i, u in enumerate(dirs)
                if in_cap_antipodal(u, axis, delta)]

    candidates = []
    seen = set()
    for u in dirs:
        if pythagorean_only and not is_pythagorean(u):
            continue
        key = primitive_vector(u)
        if key not in seen:
            seen.add(key)
            candidates.append(u)
    for v in build_cover(params).directions:
        key = primitive_vector(v)
        if key not in seen:
            seen.add(key)
            candidates.append(v)

    best_axis = None
    best_hits = []
    for axis in candidates:
        h = hits_of(axis)
        if len(h) > len(best_hits):
            best_axis, best_hits = axis, h
            if len(h) >= n:
                break
    if best_axis is not None and len(best_hits) >= target:
        return best_axis, tuple(best_hits)

    if d == 2:
        # Probe spacing c/(2n) in the tangent parameter keeps the angular
        # gap below pi*c/(2n), and some superlevel arc of the hit-count
        # function is at least that long, so a probe must land in it.
        per_quadrant = max(8, math.ceil(Fraction(2 * n, c)))
        for axis in circle_grid(per_quadrant, half=True):
            h = hits_of(axis)
            if len(h) > len(best_hits):
                best_axis, best_hits = axis, h
                if len(h) >= target:
                    break
    if len(best_hits) < target and d >= 3:
        warnings.warn(
            "pigeonhole guarantee not certified for d >= 3; returning the "
            "best axis found", CoverageUnverifiedWarning)
    return best_axis, tuple(best_hits)
