"""The LP route to the (p,q) theorem for diameter.

Pipeline: a finite ground set of witness segments stands in for the space
of all convex sets of diameter 1-delta (every proof in sight produces
two-point witnesses, so segments lose nothing; incompleteness of the
surrogate surfaces as GroundSetInsufficient rather than silently).  Exact
LPs give the fractional transversal and packing numbers, equal by duality;
weight rationalization plus a weak net round the fractional cover into an
honest transversal, with the delta budget split exactly as
(1 - delta/2)^2 >= 1 - delta.

Everything returned is certificate-first: transversals are membership
verified body by body before they leave this module.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, gcd, isqrt

from . import simplex
from .core import ConvexBody, Family, Segment
from .diameter_helly import fractional_helly_diameter
from .errors import GroundSetInsufficient, InternalError, PreconditionFailed
from .intersections import SubsetGeometry
from .linalg import rational_sqrt, vec_add, vec_scale, vec_sub
from .tverberg import weak_net_diameter

F0 = Fraction(0)
F1 = Fraction(1)


@dataclass(frozen=True)
class GroundSet:
    candidates: tuple  # Segments, each with squared_length >= (1-delta)^2
    delta: Fraction


@dataclass(frozen=True)
class FractionalWeights:
    weights: tuple
    total: Fraction


@dataclass(frozen=True)
class Transversal:
    elements: tuple  # Segments; every family body contains at least one


@dataclass(frozen=True)
class PqCondition:
    p: int
    q: int
    holds: bool
    violator: tuple = None  # p-subset with no wide q-sub-subset


@dataclass(frozen=True)
class PqReport:
    transversal: Transversal
    tau_star: Fraction
    nu_star: Fraction
    ground_size: int
    beta_observed: Fraction = None
    lemma_bound: Fraction = None  # 1 / beta_observed when computed


@dataclass(frozen=True)
class PartitionResult:
    parts: tuple  # index tuples, disjoint cover
    elements: tuple  # the transversal element assigned to each part


def shrink_segment(seg, target):
    """Sub-segment about the midpoint with squared length >= target^2,
    as close to it as rational coordinates allow (exact when the length
    is rational)."""
    target = Fraction(target)
    sq = seg.squared_length
    t2 = target * target
    if sq < t2:
        raise ValueError("segment shorter than the shrink target")
    if sq == t2:
        return seg.sorted()
    length = rational_sqrt(sq)
    if length is not None:
        rho = target / length
    else:
        bits = 24
        scale = 1 << bits
        # smallest k/2^bits with (k/2^bits)^2 * sq >= target^2
        k = isqrt((t2 * scale * scale / sq).__ceil__())
        while Fraction(k * k) * sq < t2 * scale * scale:
            k += 1
        rho = Fraction(k, scale)
    if rho > 1:
        rho = F1
    mid = vec_scale(Fraction(1, 2), vec_add(seg.a, seg.b))
    half = vec_scale(rho / 2, vec_sub(seg.b, seg.a))
    return Segment(vec_sub(mid, half), vec_add(mid, half)).sorted()


def ground_set(family, delta, q):
    """Witness segments of wide q-subset and 2d-subset intersections,
    shrunk to the (1-delta) floor and deduplicated."""
    delta = Fraction(delta)
    d = family.dim
    if q < 2 * d:
        raise ValueError(f"q must be at least 2d = {2 * d}")
    n = len(family)
    geo = SubsetGeometry(family)
    target = 1 - delta
    out = {}
    sizes = {min(q, n), min(2 * d, n)}
    for size in sorted(sizes):
        for sub in combinations(range(n), size):
            got = geo.diameter_of(sub)
            if got is None or got[0] < 1:
                continue
            seg = shrink_segment(got[1], target)
            out[(seg.a, seg.b)] = seg
    candidates = tuple(out[k] for k in sorted(out))
    return GroundSet(candidates, delta)


def _containment_matrix(family, gs):
    mat = []
    for body in family.bodies:
        mat.append([body.contains(seg.a) and body.contains(seg.b)
                    for seg in gs.candidates])
    return mat


def fractional_transversal(family, gs):
    """Exact minimum total weight on candidates covering every body."""
    mat = _containment_matrix(family, gs)
    uncovered = [i for i, row in enumerate(mat) if not any(row)]
    if uncovered:
        raise GroundSetInsufficient(
            "bodies with no contained candidate", uncovered)
    ncand = len(gs.candidates)
    A_ub = []
    b_ub = []
    for row in mat:
        A_ub.append([Fraction(-1) if hit else F0 for hit in row])
        b_ub.append(Fraction(-1))
    for j in range(ncand):
        e = [F0] * ncand
        e[j] = F1
        A_ub.append(e)
        b_ub.append(F1)
    res = simplex.solve([F1] * ncand, A_ub=A_ub, b_ub=b_ub, nonneg=True)
    if res.status != simplex.OPTIMAL:
        raise InternalError("covering LP must be feasible after the precheck")
    return FractionalWeights(tuple(res.x), sum(res.x, F0))


def fractional_packing(family, gs):
    """Exact maximum total weight on bodies, at most 1 over each candidate."""
    if not gs.candidates:
        # No packing constraints beyond the [0,1] box.
        n = len(family)
        return FractionalWeights((F1,) * n, Fraction(n))
    mat = _containment_matrix(family, gs)
    n = len(family)
    A_ub = []
    b_ub = []
    for j in range(len(gs.candidates)):
        A_ub.append([F1 if mat[i][j] else F0 for i in range(n)])
        b_ub.append(F1)
    for i in range(n):
        e = [F0] * n
        e[i] = F1
        A_ub.append(e)
        b_ub.append(F1)
    res = simplex.solve([F1] * n, A_ub=A_ub, b_ub=b_ub, nonneg=True,
                        sense="max")
    if res.status != simplex.OPTIMAL:
        raise InternalError("packing LP is bounded by the box rows")
    return FractionalWeights(tuple(res.x), sum(res.x, F0))


def _lcm(nums):
    out = 1
    for v in nums:
        out = out * v // gcd(out, v)
    return out


def transversal_from_weights(family, gs, weights, delta, multiset_cap=24,
                             exhaustive_cap=14):
    """Round a fractional cover at delta/2 into a (1-delta) transversal.

    Builds the multiset of candidate copies, takes a weak (D/|T|)-net of it
    at delta/2, and verifies the net elements cover every body.  Weight
    denominators are coarsened (rounded up, so coverage is kept) when the
    exact common denominator would blow the multiset past multiset_cap.
    """
    delta = Fraction(delta)
    if gs.delta != delta / 2:
        raise ValueError("ground set must be built at delta/2")
    weights = [Fraction(w) for w in weights]
    if len(weights) != len(gs.candidates):
        raise ValueError("weight vector does not match the ground set")
    if any(w < 0 or w > 1 for w in weights):
        raise ValueError("weights must lie in [0,1]")
    mat = _containment_matrix(family, gs)
    for i, row in enumerate(mat):
        covered = sum((w for hit, w in zip(row, weights) if hit), F0)
        if covered < 1:
            raise ValueError(f"weights do not fractionally cover body {i}")

    support = [j for j, w in enumerate(weights) if w > 0]
    M = _lcm([weights[j].denominator for j in support]) if support else 1

    def copies_for(D):
        out = []
        for j in support:
            k = weights[j] * D
            out.append((j, int(k) if k.denominator == 1 else int(k) + 1))
        return out

    D = M
    if sum(k for _, k in copies_for(D)) > multiset_cap:
        lo, hi = 1, M
        while lo < hi:
            midpoint = (lo + hi + 1) // 2
            if sum(k for _, k in copies_for(midpoint)) <= multiset_cap:
                lo = midpoint
            else:
                hi = midpoint - 1
        D = lo
    copies = copies_for(D)
    total_copies = sum(k for _, k in copies)

    copy_bodies = []
    copy_candidates = []
    for j, k in copies:
        seg = gs.candidates[j]
        body = ConvexBody.from_segment(seg)
        for _ in range(k):
            copy_candidates.append(j)
            copy_bodies.append(body)
    net_family = Family.of(copy_bodies)

    required = []
    for i, row in enumerate(mat):
        owned = tuple(pos for pos, j in enumerate(copy_candidates) if row[j])
        if len(owned) < D:
            raise InternalError(
                "coarsened copies lost the per-body coverage count")
        required.append(owned)

    floor = 1 - delta / 2
    # tau* = 1 makes the net parameter exactly 1; nudging it below 1 keeps
    # the same qualifying subfamilies (only the whole multiset).
    eps = min(Fraction(D, total_copies),
              Fraction(2 * total_copies - 1, 2 * total_copies))
    net = weak_net_diameter(net_family, eps, delta / 2,
                            exhaustive_cap=exhaustive_cap,
                            required_subfamilies=required, floor=floor)

    bound_sq = (1 - delta) ** 2
    for seg in net.elements:
        if seg.squared_length < bound_sq:
            raise InternalError("net element below the (1-delta) floor")
    for i, body in enumerate(family.bodies):
        if not any(body.contains(seg.a) and body.contains(seg.b)
                   for seg in net.elements):
            raise InternalError(
                f"transversal misses body {i} despite the net hook")
    return Transversal(tuple(net.elements))


def check_pq(family, p, q):
    """Exhaustive diameter (p,q) condition check with violator extraction."""
    d = family.dim
    n = len(family)
    if not (n >= p >= q >= 2 * d):
        raise ValueError(f"need |family| >= p >= q >= 2d, got "
                         f"n={n}, p={p}, q={q}, 2d={2 * d}")
    geo = SubsetGeometry(family)
    for psub in combinations(range(n), p):
        found = False
        for qsub in combinations(psub, q):
            if geo.is_wide(qsub):
                found = True
                break
        if not found:
            return PqCondition(p, q, False, psub)
    return PqCondition(p, q, True)


def pq_transversal(family, p, q, delta, multiset_cap=24, exhaustive_cap=14,
                   copies_cap=40):
    """Full Alon-Kleitman pipeline under the diameter (p,q) condition."""
    delta = Fraction(delta)
    geo = SubsetGeometry(family)
    for i in range(len(family)):
        if not geo.is_wide((i,)):
            raise PreconditionFailed(
                f"body {i} has squared diameter below 1", detail=i)
    cond = check_pq(family, p, q)
    if not cond.holds:
        raise PreconditionFailed("diameter (p,q) condition fails",
                                 detail=cond.violator)

    gs = ground_set(family, delta / 2, q)
    beta = None
    bound = None
    for _ in range(5):
        tw = fractional_transversal(family, gs)
        pk = fractional_packing(family, gs)
        if tw.total != pk.total:
            raise InternalError("LP duality gap on exact rational LPs")

        enriched = False
        support = [i for i, w in enumerate(pk.weights) if w > 0]
        m_den = _lcm([pk.weights[i].denominator for i in support]) if support else 1
        n_copies = sum(int(pk.weights[i] * m_den) for i in support)
        # The ((q-1)(p-1)+1, q) argument needs at least that many copies;
        # scaling the denominator keeps the weights and restores it.
        min_copies = (q - 1) * (p - 1) + 1
        if n_copies:
            scale = max(1, ceil(min_copies / n_copies))
            m_den *= scale
            n_copies *= scale
        if support and n_copies <= copies_cap:
            bodies = []
            for i in support:
                bodies.extend([family[i]] * int(pk.weights[i] * m_den))
            fd = fractional_helly_diameter(Family.of(bodies), delta / 2)
            beta = fd.beta_observed
            bound = 1 / beta if beta > 0 else None
            if bound is not None and pk.total > bound:
                # The packing LP never saw this pair; add it and re-solve.
                k0 = shrink_segment(fd.witness.segment, 1 - delta / 2)
                if k0 not in gs.candidates:
                    merged = dict.fromkeys(list(gs.candidates) + [k0])
                    gs = GroundSet(tuple(sorted(
                        merged, key=lambda s: (s.a, s.b))), gs.delta)
                    enriched = True
                else:
                    raise InternalError(
                        "packing exceeds the fractional Helly bound with "
                        "the witness already priced")
        if not enriched:
            transversal = transversal_from_weights(
                family, gs, tw.weights, delta, multiset_cap=multiset_cap,
                exhaustive_cap=exhaustive_cap)
            return PqReport(transversal, tw.total, pk.total,
                            len(gs.candidates), beta, bound)
    raise InternalError("ground-set enrichment failed to stabilize")


def partition_large_intersections(family, delta, **kwargs):
    """Split a family with wide 2d-wise intersections into parts whose own
    intersections stay wide at the (1-delta) level."""
    delta = Fraction(delta)
    d = family.dim
    report = pq_transversal(family, 2 * d, 2 * d, delta, **kwargs)
    elements = report.transversal.elements
    fibers = {}
    for i, body in enumerate(family.bodies):
        owner = None
        for j, seg in enumerate(elements):
            if body.contains(seg.a) and body.contains(seg.b):
                owner = j
                break
        if owner is None:
            raise InternalError("verified transversal lost a body")
        fibers.setdefault(owner, []).append(i)

    parts = []
    assigned = []
    for j in sorted(fibers):
        parts.append(tuple(sorted(fibers[j])))
        assigned.append(elements[j])
    bound_sq = (1 - delta) ** 2
    for part, seg in zip(parts, assigned):
        for i in part:
            body = family[i]
            if not (body.contains(seg.a) and body.contains(seg.b)):
                raise InternalError("fiber assignment broke containment")
        if seg.squared_length < bound_sq:
            raise InternalError("part witness below the floor")
    return PartitionResult(tuple(parts), tuple(assigned))
