"""Exact convex-geometry kernel over rational H-polytopes.

Conventions used throughout the library:

* Scalars are ``fractions.Fraction``; nothing ever leaves the rationals.
* Points and directions are plain tuples of Fractions.  Tuples compare
  lexicographically, which is exactly the tie-break order we need.
* A ConvexBody is {x : A x <= b}.  Halfspaces are 1-row bodies.
* Directions are unnormalized; every width/length predicate is stated
  through squared quantities so no square roots are ever taken.
* Lengths and diameters are carried as exact *squared* values.

Directional minima of polytopes are not unique (flat faces), so every
extremum operation breaks ties lexicographically: minimize x1, then x2, ...
among the optimizers.  This is the exact analogue of perturbing the
objective direction infinitesimally.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import simplex
from .errors import (
    DimensionMismatch,
    EmptyBody,
    InternalError,
    PreconditionFailed,
    Unbounded,
)
from .linalg import (
    dot,
    kernel_basis,
    rank,
    solve_square,
    sq_dist,
    sq_norm,
    vec_sub,
)

Scalar = Fraction
Point = tuple  # tuple[Fraction, ...]
Direction = tuple  # tuple[Fraction, ...], not all zero

MAX = "max"
MIN = "min"


def pt(*coords):
    """Build a Point from ints/Fractions/strings like '1/3'."""
    return tuple(Fraction(c) for c in coords)


def _as_point(coords):
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Segment:
    """Ordered pair of rational points; the universal witness object."""

    a: tuple
    b: tuple

    @property
    def squared_length(self):
        return sq_dist(self.a, self.b)

    def direction(self):
        """b - a; zero vector for a degenerate segment."""
        return vec_sub(self.b, self.a)

    def endpoints(self):
        return (self.a, self.b)

    def sorted(self):
        """Same segment with lexicographically smaller endpoint first."""
        if self.b < self.a:
            return Segment(self.b, self.a)
        return self


class ConvexBody:
    """Rational H-polytope {x : A x <= b} with a lazy vertex cache."""

    __slots__ = ("A", "b", "dim", "_vertices")

    def __init__(self, A, b, dim=None):
        A = tuple(tuple(Fraction(x) for x in row) for row in A)
        b = tuple(Fraction(x) for x in b)
        if len(A) != len(b):
            raise DimensionMismatch("row count of A must match length of b")
        if A:
            d = len(A[0])
            if any(len(row) != d for row in A):
                raise DimensionMismatch("ragged constraint matrix")
            if dim is not None and dim != d:
                raise DimensionMismatch("explicit dim disagrees with A")
            dim = d
        elif dim is None:
            raise DimensionMismatch("empty constraint list needs explicit dim")
        self.A = A
        self.b = b
        self.dim = dim
        self._vertices = None

    @property
    def cached_vertices(self):
        return self._vertices

    def contains(self, point):
        if len(point) != self.dim:
            raise DimensionMismatch("point dimension mismatch")
        return all(dot(row, point) <= rhs for row, rhs in zip(self.A, self.b))

    def __repr__(self):
        return f"ConvexBody(d={self.dim}, rows={len(self.A)})"

    @classmethod
    def box(cls, lows, highs):
        """Axis-aligned box: lows[i] <= x_i <= highs[i]."""
        lows = _as_point(lows)
        highs = _as_point(highs)
        d = len(lows)
        A, b = [], []
        for i in range(d):
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            A.append(tuple(row))
            b.append(highs[i])
            row = [Fraction(0)] * d
            row[i] = Fraction(-1)
            A.append(tuple(row))
            b.append(-lows[i])
        return cls(A, b)

    @classmethod
    def from_points(cls, points):
        """H-representation of the convex hull of a full-dimensional point set."""
        return _hull_body(points)

    @classmethod
    def from_segment(cls, seg):
        """Degenerate body whose point set is exactly the segment."""
        return _segment_body(seg)


@dataclass(frozen=True)
class Family:
    """Indexed list of bodies sharing one ambient dimension."""

    bodies: tuple
    dim: int

    def __post_init__(self):
        for body in self.bodies:
            if body.dim != self.dim:
                raise DimensionMismatch("family members must share dimension")

    def __len__(self):
        return len(self.bodies)

    def __getitem__(self, i):
        return self.bodies[i]

    @classmethod
    def of(cls, bodies):
        bodies = tuple(bodies)
        if not bodies:
            raise ValueError("family must be nonempty")
        return cls(bodies, bodies[0].dim)


@dataclass(frozen=True)
class LpOutcome:
    status: str  # simplex.OPTIMAL / INFEASIBLE / UNBOUNDED
    value: Fraction = None
    point: tuple = None


def primitive_vector(v):
    """Scale a nonzero rational vector to a primitive integer vector with
    positive leading entry.  Projective normal form: v, 2v and -v all map to
    the same tuple, so use only where orientation does not matter."""
    from math import gcd

    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    num = 0
    for x in v:
        num = gcd(num, abs(x.numerator * (den // x.denominator)))
    if num == 0:
        raise ValueError("zero vector")
    scale = Fraction(den, num)
    out = tuple(x * scale for x in v)
    for x in out:
        if x != 0:
            if x < 0:
                out = tuple(-y for y in out)
            break
    return out


def oriented_primitive_vector(v):
    """Primitive integer form of v keeping its orientation."""
    from math import gcd

    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    num = 0
    for x in v:
        num = gcd(num, abs(x.numerator * (den // x.denominator)))
    if num == 0:
        raise ValueError("zero vector")
    scale = Fraction(den, num)
    return tuple(x * scale for x in v)


def _canonical_halfplane(row, rhs):
    """Like canonical_row but keeps the inequality direction (no sign flip)."""
    from math import gcd

    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    num = 0
    for x in row:
        num = gcd(num, abs(x.numerator * (den // x.denominator)))
    if num == 0:
        raise ValueError("zero constraint row")
    scale = Fraction(den, num)
    return tuple(x * scale for x in row), rhs * scale


# ---------------------------------------------------------------------------
# LP layer
# ---------------------------------------------------------------------------

def solve_lp(objective, body, sense):
    """Exact optimum of <objective, x> over the body."""
    if len(objective) != body.dim:
        raise DimensionMismatch("objective dimension mismatch")
    if sense not in (MAX, MIN):
        raise ValueError(f"bad sense {sense!r}")
    res = simplex.solve(
        list(objective),
        A_ub=[list(r) for r in body.A],
        b_ub=list(body.b),
        sense=sense,
    )
    if res.status != simplex.OPTIMAL:
        return LpOutcome(res.status)
    return LpOutcome(simplex.OPTIMAL, res.value, tuple(res.x))


def _lex_optimum(body, v, sense, extra_eq=None):
    """Lexicographically smallest optimizer of <v, x> over body.

    extra_eq: optional (rows, rhs) equality constraints added to the body.
    Returns (value, point).  Raises EmptyBody / Unbounded.
    """
    d = body.dim
    A_ub = [list(r) for r in body.A]
    b_ub = list(body.b)
    eq_rows = [list(r) for r in (extra_eq[0] if extra_eq else [])]
    eq_rhs = list(extra_eq[1]) if extra_eq else []

    res = simplex.solve(list(v), A_ub=A_ub, b_ub=b_ub,
                        A_eq=eq_rows, b_eq=eq_rhs, sense=sense)
    if res.status == simplex.INFEASIBLE:
        raise EmptyBody("empty polytope")
    if res.status == simplex.UNBOUNDED:
        raise Unbounded("polytope unbounded in the requested direction")
    value = res.value
    eq_rows = eq_rows + [list(v)]
    eq_rhs = eq_rhs + [value]
    point = []
    for i in range(d):
        obj = [Fraction(0)] * d
        obj[i] = Fraction(1)
        r = simplex.solve(obj, A_ub=A_ub, b_ub=b_ub,
                          A_eq=eq_rows, b_eq=eq_rhs, sense=MIN)
        if r.status == simplex.UNBOUNDED:
            raise Unbounded("polytope unbounded")
        if r.status != simplex.OPTIMAL:
            raise InternalError("lexicographic refinement lost feasibility")
        coord = r.value
        point.append(coord)
        row = [Fraction(0)] * d
        row[i] = Fraction(1)
        eq_rows.append(row)
        eq_rhs.append(coord)
    return value, tuple(point)


def directional_extremum(body, v, which):
    """Extremal point of the body in direction v, lexicographic tie-break."""
    if len(v) != body.dim or all(x == 0 for x in v):
        raise DimensionMismatch("direction must be a nonzero d-vector")
    _, point = _lex_optimum(body, v, which)
    return point


@dataclass(frozen=True)
class WidthValue:
    """v-width of a body in scale-free form.

    raw_gap = max<v,x> - min<v,x> and v_sq = <v,v>, so the normalized width
    is raw_gap / sqrt(v_sq) and 'width >= t' is the exact rational predicate
    raw_gap^2 >= t^2 * v_sq.
    """

    raw_gap: Fraction
    v_sq: Fraction
    segment: Segment

    def at_least(self, t):
        t = Fraction(t)
        return self.raw_gap * self.raw_gap >= t * t * self.v_sq


def v_width(body, v):
    """Exact v-width of a bounded nonempty body with extremizer segment."""
    lo = directional_extremum(body, v, MIN)
    hi = directional_extremum(body, v, MAX)
    gap = dot(v, hi) - dot(v, lo)
    return WidthValue(gap, sq_norm(v), Segment(lo, hi))


def intersect(bodies):
    """Constraint-row concatenation.  Redundant rows are kept."""
    bodies = list(bodies)
    if not bodies:
        raise ValueError("intersect needs at least one body")
    d = bodies[0].dim
    for body in bodies:
        if body.dim != d:
            raise DimensionMismatch("intersect: mixed dimensions")
    A, b = [], []
    for body in bodies:
        A.extend(body.A)
        b.extend(body.b)
    return ConvexBody(A, b, dim=d)


# ---------------------------------------------------------------------------
# Vertices and diameter
# ---------------------------------------------------------------------------

def _feasible(body):
    res = simplex.solve([Fraction(0)] * body.dim,
                        A_ub=[list(r) for r in body.A], b_ub=list(body.b))
    return res.status == simplex.OPTIMAL


def _check_bounded(body):
    for i in range(body.dim):
        obj = [Fraction(0)] * body.dim
        obj[i] = Fraction(1)
        for sense in (MIN, MAX):
            res = simplex.solve(obj, A_ub=[list(r) for r in body.A],
                                b_ub=list(body.b), sense=sense)
            if res.status == simplex.UNBOUNDED:
                raise Unbounded("polytope is unbounded")
            if res.status == simplex.INFEASIBLE:
                raise EmptyBody("empty polytope")


def vertices(body):
    """Exact vertex set, deduplicated, lexicographically sorted.

    Enumerates d-subsets of constraint rows, solves each square system and
    keeps feasible solutions.  Fine at desk scale (m up to ~25 rows for
    d <= 3); the result is cached on the body.
    """
    if body._vertices is not None:
        return list(body._vertices)
    if not _feasible(body):
        raise EmptyBody("empty polytope")
    _check_bounded(body)
    d = body.dim
    m = len(body.A)
    seen = set()
    A = body.A
    b = body.b
    for rows in combinations(range(m), d):
        sub = [A[i] for i in rows]
        rhs = [b[i] for i in rows]
        x = solve_square(sub, rhs)
        if x is None:
            continue
        x = tuple(x)
        if x in seen:
            continue
        ok = True
        for row, bound in zip(A, b):
            if dot(row, x) > bound:
                ok = False
                break
        if ok:
            seen.add(x)
    verts = sorted(seen)
    if not verts:
        # Feasible and bounded implies at least one vertex for d >= 1.
        raise InternalError("no vertex found for a nonempty bounded polytope")
    body._vertices = tuple(verts)
    return list(verts)


def diameter_of_points(points):
    """(squared diameter, witness) by brute force over a point list;
    ties resolved to the lexicographically smallest sorted pair."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return Fraction(0), Segment(pts[0], pts[0])
    best = None
    best_pair = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d2 = sq_dist(pts[i], pts[j])
            if best is None or d2 > best:
                best = d2
                best_pair = (pts[i], pts[j])
    return best, Segment(*best_pair)


def diameter(body):
    """Exact squared diameter of a bounded nonempty body with a witness
    segment between two vertices."""
    verts = vertices(body)
    return diameter_of_points(verts)


# ---------------------------------------------------------------------------
# Radon and hull membership
# ---------------------------------------------------------------------------

def radon_partition(points):
    """Partition d+2 points into (B, C) with intersecting hulls.

    Returns (B, C, common_point).  Zero-coefficient indices land in B.
    The affine dependence is the first kernel basis vector in rref order,
    scaled so its first nonzero entry is positive.
    """
    points = [_as_point(p) for p in points]
    if not points:
        raise DimensionMismatch("no points")
    d = len(points[0])
    if len(points) != d + 2:
        raise DimensionMismatch(f"need exactly d+2 = {d + 2} points")
    if any(len(p) != d for p in points):
        raise DimensionMismatch("ragged point list")

    rows = [[p[i] for p in points] for i in range(d)]
    rows.append([Fraction(1)] * len(points))
    basis = kernel_basis(rows, len(points))
    if not basis:
        raise InternalError("d+2 points must carry an affine dependence")
    lam = basis[0]
    for x in lam:
        if x != 0:
            if x < 0:
                lam = [-y for y in lam]
            break
    B = tuple(i for i, x in enumerate(lam) if x >= 0)
    C = tuple(i for i, x in enumerate(lam) if x < 0)
    pos_sum = sum((x for x in lam if x > 0), Fraction(0))
    if pos_sum == 0:
        raise InternalError("degenerate dependence with no positive part")
    point = tuple(
        sum((lam[i] * points[i][k] for i in B if lam[i] > 0), Fraction(0)) / pos_sum
        for k in range(d)
    )
    return B, C, point


def hull_membership(points, target):
    """Convex coefficients expressing target over points, or None.

    The returned coefficient list is a basic solution, so its support has at
    most d+1 entries.
    """
    points = [_as_point(p) for p in points]
    if not points:
        raise DimensionMismatch("empty point list")
    d = len(points[0])
    target = _as_point(target)
    if len(target) != d or any(len(p) != d for p in points):
        raise DimensionMismatch("dimension mismatch")
    n = len(points)
    A_eq = [[p[i] for p in points] for i in range(d)]
    A_eq.append([Fraction(1)] * n)
    b_eq = list(target) + [Fraction(1)]
    res = simplex.solve([Fraction(0)] * n, A_eq=A_eq, b_eq=b_eq, nonneg=True)
    if res.status != simplex.OPTIMAL:
        return None
    return res.x


def in_hull(points, target):
    return hull_membership(points, target) is not None


def caratheodory_reduce(points, coeffs, keep_positive=True):
    """Shrink a convex-combination certificate to affinely independent support.

    points/coeffs represent some target point; returns (indices, coeffs)
    with the same combination and affinely independent support.
    """
    idx = [i for i, c in enumerate(coeffs) if c > 0]
    lam = {i: coeffs[i] for i in idx}
    while True:
        if len(idx) <= 1:
            break
        rows = [[points[i][k] for i in idx] for k in range(len(points[idx[0]]))]
        rows.append([Fraction(1)] * len(idx))
        basis = kernel_basis(rows, len(idx))
        if not basis:
            break
        mu = basis[0]
        if all(x <= 0 for x in mu):
            mu = [-x for x in mu]
        theta = None
        for pos, i in enumerate(idx):
            if mu[pos] > 0:
                cand = lam[i] / mu[pos]
                if theta is None or cand < theta:
                    theta = cand
        for pos, i in enumerate(idx):
            lam[i] -= theta * mu[pos]
        idx = [i for i in idx if lam[i] > 0]
    return idx, [lam[i] for i in idx]


# ---------------------------------------------------------------------------
# Colourful Caratheodory for a point pair
# ---------------------------------------------------------------------------

def _boundary_support(points, x, y):
    """Indices of <= 2d points of `points` whose hull contains {x, y}.

    Walks the line through x and y to its two exit points on the hull
    boundary; each exit point has an affinely independent certificate of
    size <= d because its support lies in a proper face.
    """
    n = len(points)
    d = len(x)
    if x == y:
        coeffs = hull_membership(points, x)
        if coeffs is None:
            raise PreconditionFailed("target not in hull")
        idx, _ = caratheodory_reduce(points, coeffs)
        return sorted(idx)

    u = vec_sub(y, x)
    support = set()
    for sense in (MAX, MIN):
        # vars: lam_1..lam_n >= 0, tp >= 0, tm >= 0 with t = tp - tm
        cols = n + 2
        A_eq = []
        for k in range(d):
            A_eq.append([points[i][k] for i in range(n)] + [-u[k], u[k]])
        A_eq.append([Fraction(1)] * n + [Fraction(0), Fraction(0)])
        b_eq = list(x) + [Fraction(1)]
        c = [Fraction(0)] * n + [Fraction(1), Fraction(-1)]
        res = simplex.solve(c, A_eq=A_eq, b_eq=b_eq, nonneg=True, sense=sense)
        if res.status == simplex.INFEASIBLE:
            raise PreconditionFailed("pair endpoints not in hull")
        if res.status != simplex.OPTIMAL:
            raise InternalError("line search over a compact hull cannot be unbounded")
        lam = res.x[:n]
        idx, _ = caratheodory_reduce(points, lam)
        support.update(idx)
    return sorted(support)


def colorful_caratheodory_pair(classes, x, y):
    """One point index per class with {x, y} inside the selection's hull.

    classes: list of 2d point lists, each containing {x, y} in its hull.
    Returns a list of indices, one into each class.  Equal classes get the
    constructive boundary-walk path; distinct classes fall back to an
    exhaustive rainbow search (desk scale).
    """
    x = _as_point(x)
    y = _as_point(y)
    d = len(x)
    if len(classes) != 2 * d:
        raise PreconditionFailed(f"need exactly 2d = {2 * d} classes")
    classes = [[_as_point(p) for p in cls] for cls in classes]
    for k, cls in enumerate(classes):
        if not cls:
            raise PreconditionFailed(f"class {k} is empty")
        if hull_membership(cls, x) is None or hull_membership(cls, y) is None:
            raise PreconditionFailed(
                f"class {k} does not contain both target points", detail=k)

    key0 = frozenset(classes[0])
    if all(frozenset(cls) == key0 for cls in classes):
        pool = classes[0]
        chosen = _boundary_support(pool, x, y)
        if len(chosen) > 2 * d:
            raise InternalError("boundary supports exceeded 2d points")
        selection = []
        for k in range(2 * d):
            if k < len(chosen):
                selection.append(classes[k].index(pool[chosen[k]]))
            else:
                selection.append(0)
        _verify_pair_selection(classes, selection, x, y)
        return selection

    for combo in _index_product([len(c) for c in classes]):
        pts = [classes[k][i] for k, i in enumerate(combo)]
        if in_hull(pts, x) and in_hull(pts, y):
            selection = list(combo)
            _verify_pair_selection(classes, selection, x, y)
            return selection
    raise InternalError(
        "exhaustive rainbow search failed although the hypothesis holds")


def _index_product(sizes):
    combo = [0] * len(sizes)
    while True:
        yield tuple(combo)
        k = len(sizes) - 1
        while k >= 0:
            combo[k] += 1
            if combo[k] < sizes[k]:
                break
            combo[k] = 0
            k -= 1
        if k < 0:
            return


def _verify_pair_selection(classes, selection, x, y):
    pts = [classes[k][i] for k, i in enumerate(selection)]
    if not (in_hull(pts, x) and in_hull(pts, y)):
        raise InternalError("pair selection failed its membership check")


# ---------------------------------------------------------------------------
# V -> H conversion
# ---------------------------------------------------------------------------

def _segment_body(seg):
    a, b = seg.a, seg.b
    d = len(a)
    u = vec_sub(b, a)
    A, rhs = [], []
    if all(c == 0 for c in u):
        for i in range(d):
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            A.append(tuple(row))
            rhs.append(a[i])
            A.append(tuple(-x for x in row))
            rhs.append(-a[i])
        return ConvexBody(A, rhs)
    for w in kernel_basis([list(u)], d):
        w = tuple(w)
        c = dot(w, a)
        A.append(w)
        rhs.append(c)
        A.append(tuple(-x for x in w))
        rhs.append(-c)
    A.append(tuple(u))
    rhs.append(dot(u, b))
    A.append(tuple(-x for x in u))
    rhs.append(-dot(u, a))
    return ConvexBody(A, rhs)


def _hull_body(points):
    points = sorted(set(_as_point(p) for p in points))
    if not points:
        raise ValueError("hull of no points")
    d = len(points[0])
    if d == 1:
        lo = min(points)[0]
        hi = max(points)[0]
        return ConvexBody([(Fraction(1),), (Fraction(-1),)], [hi, -lo])
    diffs = [list(vec_sub(p, points[0])) for p in points[1:]]
    if rank(diffs) < d:
        raise ValueError("point set is not full-dimensional")
    if d == 2:
        from .geom2d import convex_hull, polygon_rows

        rows = polygon_rows(convex_hull(points))
        return ConvexBody([r for r, _ in rows], [c for _, c in rows])
    rows = {}
    for sub in combinations(points, d):
        mat = [list(vec_sub(p, sub[0])) for p in sub[1:]]
        normal = kernel_basis(mat, d)
        if len(normal) != 1:
            continue
        w = tuple(normal[0])
        c = dot(w, sub[0])
        above = any(dot(w, p) > c for p in points)
        below = any(dot(w, p) < c for p in points)
        if above and below:
            continue
        if above:
            w = tuple(-x for x in w)
            c = -c
        key = _canonical_halfplane(w, c)
        rows[key] = None
    A = []
    rhs = []
    for w, c in sorted(rows.keys()):
        A.append(w)
        rhs.append(c)
    return ConvexBody(A, rhs)
