"""Independent certificate re-checkers.

Everything here uses only convex-core primitives (exact containment tests,
vertex diameters, hull membership), so a report plus the input family is
enough to re-verify any result without trusting the producing module.
"""

from fractions import Fraction

from .core import hull_membership, intersect, v_width
from .errors import EmptyBody, GeometryError
from .intersections import intersection_diameter
from .linalg import sq_norm


def check_width_witness(family, v, t, witness):
    """Endpoints in every body and raw gap meeting the threshold."""
    t = Fraction(t)
    seg = witness.segment
    for body in family.bodies:
        if not (body.contains(seg.a) and body.contains(seg.b)):
            return False
    gap = witness.raw_gap
    return gap >= 0 and gap * gap >= t * t * sq_norm(v)


def check_class_width_witness(classes, v, t, result):
    cls = classes[result.index]
    return check_width_witness(cls, v, t, result.witness)


def check_width_counterexample(classes, v, t, result):
    bodies = [classes[k][i] for k, i in enumerate(result.choice.indices)]
    t = Fraction(t)
    try:
        w = v_width(intersect(bodies), v)
    except GeometryError:
        return True  # empty intersection is certainly thin
    return not w.at_least(t)


def check_members_contain_pair(family, members, seg):
    return all(family[i].contains(seg.a) and family[i].contains(seg.b)
               for i in members)


def check_diameter_witness(family, indices, floor_sq, witness):
    """Witness inside every indexed body and long enough."""
    seg = witness.segment
    if witness.squared_length != seg.squared_length:
        return False
    if seg.squared_length < floor_sq:
        return False
    return check_members_contain_pair(family, indices, seg)


def check_colourful_diameter_counterexample(classes, result):
    bodies = [classes[k][i] for k, i in enumerate(result.choice.indices)]
    got = intersection_diameter(bodies)
    sq = Fraction(0) if got is None else got[0]
    return sq == result.diameter_sq and sq < 1


def check_tverberg(family, result, bound_sq):
    seen = set()
    for part in result.parts:
        if not part or (seen & set(part)):
            return False
        seen |= set(part)
    if seen != set(range(len(family))):
        return False
    if result.witness.squared_length < bound_sq:
        return False
    from .core import vertices

    for part in result.parts:
        points = []
        for i in part:
            points.extend(vertices(family[i]))
        for target in (result.witness.a, result.witness.b):
            if hull_membership(points, target) is None:
                return False
    return True


def check_selection(family, result, bound_sq):
    if result.witness.squared_length < bound_sq:
        return False
    from .core import vertices

    for sub in result.covered:
        points = []
        for i in sub:
            points.extend(vertices(family[i]))
        for target in (result.witness.a, result.witness.b):
            if hull_membership(points, target) is None:
                return False
    return len(result.covered) > 0


def check_net(family, epsilon, result, bound_sq, exhaustive_limit=4000):
    """Posterior net check: every ceil(eps n)-subset hull holds an element.

    Exhaustive as long as the subset count stays under exhaustive_limit;
    returns None (inconclusive) beyond that.
    """
    from itertools import combinations
    from math import comb

    from .core import vertices

    n = len(family)
    eps = Fraction(epsilon)
    kmin = eps * n
    k = kmin.numerator // kmin.denominator
    if k < kmin:
        k += 1
    k = max(k, 1)
    for seg in result.elements:
        if seg.squared_length < bound_sq:
            return False
    if comb(n, k) > exhaustive_limit:
        return None
    vert = [vertices(b) for b in family.bodies]
    for sub in combinations(range(n), k):
        points = []
        for i in sub:
            points.extend(vert[i])
        hit = False
        for seg in result.elements:
            if (hull_membership(points, seg.a) is not None
                    and hull_membership(points, seg.b) is not None):
                hit = True
                break
        if not hit:
            return False
    return True


def check_transversal(family, transversal, bound_sq):
    for seg in transversal.elements:
        if seg.squared_length < bound_sq:
            return False
    for body in family.bodies:
        if not any(body.contains(seg.a) and body.contains(seg.b)
                   for seg in transversal.elements):
            return False
    return True


def check_partition(family, result, bound_sq):
    seen = set()
    for part, seg in zip(result.parts, result.elements):
        if not part or (seen & set(part)):
            return False
        seen |= set(part)
        if seg.squared_length < bound_sq:
            return False
        for i in part:
            if not (family[i].contains(seg.a) and family[i].contains(seg.b)):
                return False
    return seen == set(range(len(family)))
