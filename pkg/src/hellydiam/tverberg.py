"""Tverberg partitions, the selection lemma, and weak nets for diameter.

The common skeleton: pigeonhole the per-body diameter directions into one
axis v, so a subfamily T' has v-width >= (1-delta) each; the witness pair
(x, y) realises the v-width of the intersection of hulls of all large
sub-subfamilies of T' (the robust hull); peeling off colourful-Caratheodory
supports of {x, y} splits T' into parts whose hulls all keep the pair.

Every result re-verifies its own certificate by exact hull membership
before returning; a verification failure is an InternalError because the
theorems guarantee success once the (checked) preconditions hold.

A `floor` parameter scales the diameter hypothesis: public statements are
floor = 1, while the transversal pipeline reuses everything at
floor = 1 - delta/2 (its candidates are slightly short of unit diameter).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .caps import CapParams, cap_fraction, pigeonhole_direction
from .core import MAX, MIN, Segment, _boundary_support, hull_membership, vertices
from .errors import InternalError, PreconditionFailed
from .geom2d import convex_hull, point_in_polygon
from .intersections import SubsetGeometry
from .linalg import dot, sq_norm
from .robust import RobustHull


@dataclass(frozen=True)
class TverbergResult:
    parts: tuple  # tuple of index tuples, disjoint cover of the family
    witness: Segment


@dataclass(frozen=True)
class SelectionResult:
    witness: Segment
    covered: tuple  # 2d-sized index tuples whose union hull contains witness
    total_subsets: int

    @property
    def lambda_observed(self):
        return Fraction(len(self.covered), self.total_subsets)


@dataclass(frozen=True)
class NetResult:
    elements: tuple  # Segments
    exhaustive: bool  # False = heuristic violator search (NetHeuristic)


def required_tverberg_size(dim, m, delta):
    """The size formula floor(4 d^2 (m-1) / c_delta) + 1 with this
    artifact's certified cap bound standing in for c_delta."""
    c = cap_fraction(CapParams(dim, Fraction(delta)))
    return int(Fraction(4 * dim * dim * (m - 1)) / c) + 1


def _point_in_point_hull(points, target, dim, hull_cache=None, key=None):
    if dim <= 2:
        if dim == 1:
            xs = [p[0] for p in points]
            return min(xs) <= target[0] <= max(xs)
        if hull_cache is not None and key is not None:
            hull = hull_cache.get(key)
            if hull is None:
                hull = convex_hull(points)
                hull_cache[key] = hull
        else:
            hull = convex_hull(points)
        return point_in_polygon(hull, target)
    return hull_membership(points, target) is not None


def _check_diameters(geo, floor_sq):
    dirs = []
    for i in range(len(geo.family)):
        got = geo.diameter_of((i,))
        if got is None or got[0] < floor_sq:
            raise PreconditionFailed(
                f"body {i} has squared diameter below {floor_sq}", detail=i)
        dirs.append(got[1].direction())
    return dirs


def _pigeonholed_width_pair(family, geo, delta, floor):
    """(axis v, hit indices).  Every hit body has v-width >= (1-delta)*floor."""
    dirs = _check_diameters(geo, floor * floor)
    axis, hits = pigeonhole_direction(dirs, CapParams(family.dim, delta))
    return axis, list(hits)


def tverberg_diameter(family, m, delta, floor=Fraction(1)):
    """Partition into m parts whose hulls share a (1-delta)*floor segment."""
    delta = Fraction(delta)
    floor = Fraction(floor)
    if m < 1:
        raise ValueError("m must be a positive integer")
    if not (0 < delta < 1):
        raise ValueError("delta must lie in (0,1)")
    d = family.dim
    n = len(family)
    need = required_tverberg_size(d, m, delta)
    if n < need:
        raise PreconditionFailed(
            f"need at least {need} bodies for m={m}, delta={delta}",
            detail=need)

    geo = SubsetGeometry(family)
    axis, hits = _pigeonholed_width_pair(family, geo, delta, floor)
    trim = 4 * d * d * (m - 1) + 1
    if len(hits) < trim:
        raise InternalError(
            f"pigeonhole captured {len(hits)} < {trim} bodies")
    tprime = hits[:trim]
    vsets = [geo.vertices_of((i,)) for i in tprime]

    s = (m - 1) * (2 * d - 1) * 2 * d + 1
    hull = RobustHull(vsets, s)
    x, y = hull.width_extremes(axis)

    gap = dot(axis, y) - dot(axis, x)
    bound = (1 - delta) * floor
    if gap < 0 or gap * gap < bound * bound * sq_norm(axis):
        raise InternalError("robust width witness below the cap bound")
    witness = Segment(x, y)

    parts = []
    pool = list(range(len(tprime)))
    hull_cache = {}
    for _ in range(m - 1):
        pool_points = sorted({p for i in pool for p in vsets[i]})
        chosen = _boundary_support(pool_points, x, y)
        sources = set()
        for ci in chosen:
            point = pool_points[ci]
            for i in pool:
                if point in vsets[i]:
                    sources.add(i)
                    break
        if not sources:
            raise InternalError("empty Caratheodory support")
        parts.append(sorted(sources))
        pool = [i for i in pool if i not in sources]
        if not pool:
            raise InternalError("peeling exhausted the pool early")
        rest_points = sorted({p for i in pool for p in vsets[i]})
        for target in (x, y):
            if not _point_in_point_hull(rest_points, target, d):
                raise InternalError("witness escaped the remaining pool")
    parts.append(list(pool))

    index_parts = [sorted(tprime[i] for i in part) for part in parts]
    leftovers = sorted(set(range(n)) - set(tprime))
    index_parts[-1] = sorted(index_parts[-1] + leftovers)

    _verify_tverberg(family, geo, index_parts, witness, bound, hull_cache)
    return TverbergResult(tuple(tuple(p) for p in index_parts), witness)


def _verify_tverberg(family, geo, parts, witness, bound, hull_cache):
    seen = set()
    for part in parts:
        if not part:
            raise InternalError("empty part")
        if seen & set(part):
            raise InternalError("overlapping parts")
        seen |= set(part)
    if seen != set(range(len(family))):
        raise InternalError("parts do not cover the family")
    if witness.squared_length < bound * bound:
        raise InternalError("witness shorter than promised")
    d = family.dim
    for k, part in enumerate(parts):
        points = sorted({p for i in part for p in geo.vertices_of((i,))})
        for target in (witness.a, witness.b):
            if not _point_in_point_hull(points, target, d,
                                        hull_cache, frozenset(part)):
                raise InternalError(f"witness escaped hull of part {k}")


def selection_diameter(family, delta, floor=Fraction(1)):
    """Segment contained in the union-hull of many 2d-subsets.

    The partition count follows the peeling arithmetic: from n' pigeonholed
    bodies one gets floor((n'-1)/(4d^2)) + 1 parts.  Below 2d parts the
    rainbow count is vacuous, so the witness is anchored to the first
    pigeonholed body instead, which keeps the covered list provably
    nonempty at desk scale.
    """
    delta = Fraction(delta)
    floor = Fraction(floor)
    d = family.dim
    n = len(family)
    if n < 2 * d:
        raise PreconditionFailed(f"need at least 2d = {2 * d} bodies",
                                 detail=2 * d)
    geo = SubsetGeometry(family)
    axis, hits = _pigeonholed_width_pair(family, geo, delta, floor)
    parts_count = (len(hits) - 1) // (4 * d * d) + 1

    if parts_count >= 2 * d:
        trim = 4 * d * d * (parts_count - 1) + 1
        tprime = hits[:trim]
        vsets = [geo.vertices_of((i,)) for i in tprime]
        s = (parts_count - 1) * (2 * d - 1) * 2 * d + 1
        hull = RobustHull(vsets, s)
        x, y = hull.width_extremes(axis)
    else:
        vs = geo.vertices_of((hits[0],))
        x = min(vs, key=lambda p: (dot(axis, p), p))
        y = min(vs, key=lambda p: (-dot(axis, p), p))

    gap = dot(axis, y) - dot(axis, x)
    bound = (1 - delta) * floor
    if gap < 0 or gap * gap < bound * bound * sq_norm(axis):
        raise InternalError("selection witness below the cap bound")
    witness = Segment(x, y)

    covered = []
    hull_cache = {}
    for sub in combinations(range(n), 2 * d):
        points = sorted({p for i in sub for p in geo.vertices_of((i,))})
        if all(_point_in_point_hull(points, t, d, hull_cache, sub)
               for t in (witness.a, witness.b)):
            covered.append(sub)
    if not covered:
        raise InternalError("selection produced an uncovered witness")
    return SelectionResult(witness, tuple(covered), comb(n, 2 * d))


def _net_element(sub_family, delta, floor):
    """Long segment inside conv(union of the subfamily).

    The selection lemma covers subfamilies of at least 2d bodies; smaller
    ones take the degenerate route directly (the pigeonholed first member's
    own width pair, which lies in its hull and meets the length floor).
    """
    if len(sub_family) >= 2 * sub_family.dim:
        return selection_diameter(sub_family, delta, floor).witness
    geo = SubsetGeometry(sub_family)
    axis, hits = _pigeonholed_width_pair(sub_family, geo, delta, floor)
    vs = geo.vertices_of((hits[0],))
    x = min(vs, key=lambda p: (dot(axis, p), p))
    y = min(vs, key=lambda p: (-dot(axis, p), p))
    gap = dot(axis, y) - dot(axis, x)
    bound = (1 - delta) * floor
    if gap < 0 or gap * gap < bound * bound * sq_norm(axis):
        raise InternalError("degenerate net element below the cap bound")
    return Segment(x, y)


def weak_net_diameter(family, epsilon, delta, exhaustive_cap=14,
                      required_subfamilies=(), floor=Fraction(1),
                      seed=20210705, heuristic_samples=200):
    """Small list of long segments hitting the hull of every eps-fraction
    subfamily.

    Violator search is exhaustive over ceil(eps n)-subsets up to
    exhaustive_cap bodies; beyond that it samples seeded random subsets
    plus all contiguous runs and the result is flagged (exhaustive=False).
    required_subfamilies are always checked first, whatever the mode.
    """
    epsilon = Fraction(epsilon)
    delta = Fraction(delta)
    floor = Fraction(floor)
    if not (0 < epsilon < 1) or not (0 < delta < 1):
        raise ValueError("epsilon and delta must lie in (0,1)")
    d = family.dim
    n = len(family)
    geo = SubsetGeometry(family)
    _check_diameters(geo, floor * floor)

    kmin = epsilon * n
    k = kmin.numerator // kmin.denominator
    if k < kmin:
        k += 1
    k = max(k, 1)

    exhaustive = n <= exhaustive_cap
    candidates = [tuple(sorted(set(sub))) for sub in required_subfamilies]
    for sub in candidates:
        if Fraction(len(sub)) < kmin:
            raise ValueError("required subfamily below the epsilon fraction")
    if exhaustive:
        candidates += list(combinations(range(n), k))
    else:
        rng = random.Random(seed)
        seen = set(candidates)
        order = sorted(range(n))
        for i in range(n - k + 1):
            run = tuple(order[i:i + k])
            if run not in seen:
                seen.add(run)
                candidates.append(run)
        for _ in range(heuristic_samples):
            sub = tuple(sorted(rng.sample(range(n), k)))
            if sub not in seen:
                seen.add(sub)
                candidates.append(sub)

    elements = []
    hull_cache = {}
    max_rounds = len(candidates) + 1
    for _ in range(max_rounds):
        violator = None
        for sub in candidates:
            points = sorted({p for i in sub for p in geo.vertices_of((i,))})
            covered = False
            for seg in elements:
                if (_point_in_point_hull(points, seg.a, d, hull_cache, sub)
                        and _point_in_point_hull(points, seg.b, d,
                                                 hull_cache, sub)):
                    covered = True
                    break
            if not covered:
                violator = sub
                break
        if violator is None:
            break
        sub_family = type(family).of([family[i] for i in violator])
        seg = _net_element(sub_family, delta, floor)
        points = sorted({p for i in violator for p in geo.vertices_of((i,))})
        for t in (seg.a, seg.b):
            if not _point_in_point_hull(points, t, d, hull_cache, violator):
                raise InternalError("net element escaped its violator hull")
        elements.append(seg)
    else:
        raise InternalError("net loop failed to terminate")
    return NetResult(tuple(elements), exhaustive)
