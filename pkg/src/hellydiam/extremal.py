"""The lower-bound family: wide 2d-wise intersections, no fat k-partition.

Construction: one antipodal point pair v_A on the radius-1/2 sphere per
2d-subset A of the 2dk+1 body indices, and

    K_i = conv { v_A, -v_A : i in A }.

Any 2d bodies jointly contain their own pair, so their intersection has
diameter at least one.  Any partition into k parts has a part P of at
least 2d+1 bodies; every pair has some index of P outside its subset, so
the pair escapes conv(intersection of P), pushing that intersection
strictly inside the open ball of radius 1/2: diameter strictly below one.

Points come from the rational stereographic chart, so squared norms are
exactly 1/4 (no norm defect to track) and all arithmetic stays exact.
The verifier is exhaustive: every 2d-subset, every set partition into at
most k parts (restricted-growth enumeration, capped), all diameters exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import ConvexBody, Family, diameter, diameter_of_points
from .errors import InternalError
from .geom2d import clip_rows, convex_hull, polygon_diameter_sq
from .intersections import intersection_diameter
from .linalg import dot, sq_norm, vec_scale

F0 = Fraction(0)
F1 = Fraction(1)


@dataclass(frozen=True)
class ClaimFamily:
    family: Family
    k: int
    d: int
    pair_map: dict  # 2d-subset tuple -> (point, antipode)
    min_separation_cos_sq: Fraction  # max |cos|^2 between distinct pairs


@dataclass(frozen=True)
class ClaimReport:
    all_2d_wide: bool
    worst_2d_diam_sq: Fraction
    all_partitions_thin: bool
    worst_part_diam_sq: Fraction
    counts: dict = field(default_factory=dict)


def _half_sphere_point(param):
    """Stereographic chart point of squared norm exactly 1/4."""
    na = sum((x * x for x in param), F0)
    scale = Fraction(1, 2 * (1 + na))
    coords = tuple(2 * x * scale for x in param) + ((1 - na) * scale,)
    return coords


def _sphere_params(dim, count):
    """count rational chart parameters giving pairwise distinct directions."""
    if dim == 2:
        # t in (-1, 1] covers half the circle: automatically distinct mod
        # the antipodal identification.  Small denominators first (Farey
        # style) keep every downstream fraction cheap.
        from math import gcd

        seen = set()
        out = []
        q = 1
        while len(out) < count:
            for p in range(-q + 1, q + 1):
                if gcd(p, q) == 1:
                    t = Fraction(p, q)
                    if t not in seen:
                        seen.add(t)
                        out.append((t,))
            q += 1
        out = sorted(out[:count])
        return out
    params = []
    j = 1
    # Deterministic scatter; distinctness is verified by the caller.
    mods = [97, 89, 83]
    while len(params) < count:
        a = [Fraction(j, count + 1)]
        for axis in range(dim - 2):
            m = mods[axis % len(mods)]
            a.append(Fraction((j * j + (axis + 1) * j) % m, m))
        params.append(tuple(a))
        j += 1
    return params


def build_claim_family(d, k):
    """2dk+1 bodies whose 2d-wise intersections each contain a unit pair."""
    if d < 2:
        raise ValueError("the construction needs d >= 2 "
                         "(d = 1 degenerates: 2 bodies force a fat overlap)")
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = 2 * d * k + 1
    subsets = list(combinations(range(n), 2 * d))
    points = [_half_sphere_point(a) for a in _sphere_params(d, len(subsets))]

    # Distinctness up to antipodes, and the best cap separation, exactly.
    worst = F0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            u, w = points[i], points[j]
            c2 = dot(u, w) ** 2 / (sq_norm(u) * sq_norm(w))
            if c2 == 1:
                raise InternalError("coincident antipodal pairs in the grid")
            if c2 > worst:
                worst = c2

    pair_map = {}
    for sub, pt_ in zip(subsets, points):
        pair_map[sub] = (pt_, vec_scale(Fraction(-1), pt_))

    bodies = []
    for i in range(n):
        cloud = []
        for sub, (p, q) in pair_map.items():
            if i in sub:
                cloud.append(p)
                cloud.append(q)
        bodies.append(ConvexBody.from_points(cloud))
    return ClaimFamily(Family.of(bodies), k, d, pair_map, worst)


def _partitions_at_most(n, k, cap):
    """Restricted-growth enumeration of set partitions into <= k parts.

    Yields tuples of index tuples; stops after cap partitions (the caller
    flags the report as partial)."""
    a = [0] * n
    count = 0
    while True:
        nparts = max(a) + 1
        parts = [[] for _ in range(nparts)]
        for i, g in enumerate(a):
            parts[g].append(i)
        yield tuple(tuple(p) for p in parts)
        count += 1
        if count >= cap:
            return
        i = n - 1
        while i > 0:
            if a[i] <= max(a[:i]) and a[i] + 1 < k:
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
            i -= 1
        else:
            return


def verify_claim(cf, partition_cap=1000000):
    """Exhaustive check of both halves of the lower-bound claim."""
    family = cf.family
    n = len(family)
    d = cf.d

    if d == 2:
        # Subset-lattice polygon DP: every subset's intersection by one
        # halfplane-clip pass from its parent.
        polys = {}
        diam_sq = {}
        for i in range(n):
            key = frozenset([i])
            hull = convex_hull([p for sub, pq in cf.pair_map.items()
                                if i in sub for p in pq])
            polys[key] = hull
            diam_sq[key] = polygon_diameter_sq(hull)[0]
        order = sorted(range(n))
        for size in range(2, n + 1):
            for sub in combinations(order, size):
                key = frozenset(sub)
                parent = frozenset(sub[:-1])
                body = family[sub[-1]]
                poly = clip_rows(polys[parent], body.A, body.b)
                polys[key] = poly
                diam_sq[key] = (polygon_diameter_sq(poly)[0] if poly else F0)

        def diam_of(subset):
            return diam_sq[frozenset(subset)]
    else:
        cache = {}

        def diam_of(subset):
            key = frozenset(subset)
            if key not in cache:
                got = intersection_diameter([family[i] for i in sorted(key)])
                cache[key] = F0 if got is None else got[0]
            return cache[key]

    all_wide = True
    worst_wide = None
    for sub in combinations(range(n), 2 * d):
        p, q = cf.pair_map[sub]
        for i in sub:
            if not (family[i].contains(p) and family[i].contains(q)):
                raise InternalError("construction lost its own pair")
        sq = diam_of(sub)
        if worst_wide is None or sq < worst_wide:
            worst_wide = sq
        if sq < 1:
            all_wide = False

    all_thin = True
    worst_part = F0
    n_partitions = 0
    partial = False
    for parts in _partitions_at_most(n, cf.k, partition_cap):
        n_partitions += 1
        fattest_min = min(diam_of(part) for part in parts)
        if fattest_min > worst_part:
            worst_part = fattest_min
        if fattest_min >= 1:
            all_thin = False
    if n_partitions >= partition_cap:
        partial = True

    return ClaimReport(
        all_2d_wide=all_wide,
        worst_2d_diam_sq=worst_wide,
        all_partitions_thin=all_thin,
        worst_part_diam_sq=worst_part,
        counts={
            "bodies": n,
            "pairs": comb(n, 2 * d),
            "partitions_checked": n_partitions,
            "partial": partial,
        },
    )
