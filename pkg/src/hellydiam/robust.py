"""Extremes of the r-robust hull intersection.

Given vertex sets V_1..V_n and a subset size s, the object of interest is

    P  =  intersection over all G with |G| = s of conv(V_G),
    V_G = union of V_i for i in G.

Equivalently, with r = n - s: a point z lies in P iff no direction w has
all but at most r of the hulls strictly below z.  P shows up as the
"intersection of hulls of large sub-subfamilies" in the Tverberg route;
enumerating all C(n, s) hulls is hopeless, so extremes over P are computed
by cutting planes:

* relax P to a working row set W (seeded with the whole-union hull, which
  contains P and is compact);
* optimize over W, then ask a separation oracle whether the optimizer is
  in P; if not, add the H-rows of one violated union-hull and repeat.

The oracle is exact.  In the plane it sweeps the finitely many critical
directions (perpendiculars to point differences); the hit count of a
direction is constant on the open arcs between critical directions, so
checking arc representatives decides membership.  In d = 1 order statistics
do it directly, and for d >= 3 removals are enumerated (small r only).

Every added cut is the full row set of one union-hull, so the row universe
is finite and each round strictly cuts off the current optimizer:
termination is guaranteed, and the final point is the exact lexicographic
extremum of P itself.
"""

from fractions import Fraction
from itertools import combinations

from .core import ConvexBody, Segment, _lex_optimum, hull_membership, MAX, MIN
from .errors import EmptyBody, InternalError
from .geom2d import convex_hull, polygon_rows
from .linalg import dot, vec_sub

F0 = Fraction(0)
F1 = Fraction(1)


def _half_turn(w):
    """0 for angles in [0, pi), 1 for [pi, 2pi); exact."""
    x, y = w
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _sort_by_angle(ws):
    """Exact angular sort (and dedup by ray) of nonzero plane vectors."""
    import functools

    def cmp(a, b):
        ha, hb = _half_turn(a), _half_turn(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cr = a[0] * b[1] - a[1] * b[0]
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    out = []
    for w in sorted(ws, key=functools.cmp_to_key(cmp)):
        if out and cmp(out[-1], w) == 0:
            continue
        out.append(w)
    return out


class RobustHull:
    """P = intersection of conv(V_G) over all |G| = s, with exact oracles."""

    def __init__(self, vertex_sets, s, enum_cap=100000):
        self.vertex_sets = [sorted(set(map(tuple, vs))) for vs in vertex_sets]
        if not self.vertex_sets or any(not vs for vs in self.vertex_sets):
            raise ValueError("every member needs at least one vertex")
        self.n = len(self.vertex_sets)
        if not (1 <= s <= self.n):
            raise ValueError("subset size out of range")
        self.s = s
        self.r = self.n - s
        self.dim = len(self.vertex_sets[0][0])
        self.enum_cap = enum_cap
        self.all_points = sorted({p for vs in self.vertex_sets for p in vs})

    # -- separation ---------------------------------------------------------

    def violated_removal(self, z):
        """A removal set R (|R| = r) with z outside conv(V_{[n] - R}),
        or None when z is in P."""
        if self.r == 0:
            return None if self._in_union_hull(range(self.n), z) else ()
        if self.dim == 1:
            return self._violated_1d(z)
        if self.dim == 2:
            return self._violated_2d(z)
        return self._violated_enum(z)

    def _in_union_hull(self, members, z):
        pts = [p for i in members for p in self.vertex_sets[i]]
        return hull_membership(pts, z) is not None

    def _pad_removal(self, partial):
        partial = set(partial)
        for i in range(self.n):
            if len(partial) >= self.r:
                break
            if i not in partial:
                partial.add(i)
        return tuple(sorted(partial))

    def _violated_1d(self, z):
        zv = z[0]
        mins = sorted(range(self.n), key=lambda i: self.vertex_sets[i][0][0])
        maxs = sorted(range(self.n), key=lambda i: -self.vertex_sets[i][-1][0])
        # members reachable from below: those with min <= z
        low = [i for i in mins if self.vertex_sets[i][0][0] <= zv]
        if len(low) <= self.r:
            return self._pad_removal(low)
        high = [i for i in maxs if self.vertex_sets[i][-1][0] >= zv]
        if len(high) <= self.r:
            return self._pad_removal(high)
        return None

    def _count_dirs_2d(self, z):
        dirs = []
        for p in self.all_points:
            u = vec_sub(p, z)
            if u == (F0, F0):
                continue
            dirs.append((-u[1], u[0]))
            dirs.append((u[1], -u[0]))
        dirs += [(F1, F0), (F0, F1), (Fraction(-1), F0), (F0, Fraction(-1))]
        events = _sort_by_angle(dirs)
        cands = list(events)
        for k in range(len(events)):
            a = events[k]
            b = events[(k + 1) % len(events)]
            mid = (a[0] + b[0], a[1] + b[1])
            if mid != (F0, F0):
                cands.append(mid)
        return cands

    def _violated_2d(self, z):
        for w in self._count_dirs_2d(z):
            touching = []
            for i, vs in enumerate(self.vertex_sets):
                for u in vs:
                    if dot(w, u) >= dot(w, z):
                        touching.append(i)
                        break
                if len(touching) > self.r:
                    break
            if len(touching) <= self.r:
                return self._pad_removal(touching)
        return None

    def _violated_enum(self, z):
        from math import comb

        if comb(self.n, self.r) > self.enum_cap:
            raise InternalError(
                f"removal enumeration C({self.n},{self.r}) exceeds the cap; "
                "the exact sweep oracle only exists for d <= 2")
        for R in combinations(range(self.n), self.r):
            keep = [i for i in range(self.n) if i not in R]
            if not self._in_union_hull(keep, z):
                return R
        return None

    def contains(self, z):
        return self.violated_removal(tuple(z)) is None

    # -- hull rows ----------------------------------------------------------

    def _hull_rows(self, members):
        pts = sorted({p for i in members for p in self.vertex_sets[i]})
        if self.dim == 1:
            lo = pts[0][0]
            hi = pts[-1][0]
            return [((F1,), hi), ((Fraction(-1),), -lo)]
        if self.dim == 2:
            return polygon_rows(convex_hull(pts))
        body = ConvexBody.from_points(pts)
        return list(zip(body.A, body.b))

    # -- extremes -----------------------------------------------------------

    def extreme(self, v, which):
        """Exact lexicographic v-extreme point of P."""
        v = tuple(Fraction(x) for x in v)
        if self.r == 0:
            sense = 1 if which == MIN else -1
            return min(self.all_points,
                       key=lambda p: (sense * dot(v, p), p))

        from .core import _canonical_halfplane

        rows = {}

        def add(members):
            for normal, rhs in self._hull_rows(members):
                rows[_canonical_halfplane(tuple(normal), rhs)] = None

        add(range(self.n))
        order_min = sorted(range(self.n),
                           key=lambda i: min(dot(v, p) for p in self.vertex_sets[i]))
        order_max = sorted(range(self.n),
                           key=lambda i: -max(dot(v, p) for p in self.vertex_sets[i]))
        add(order_min[self.r:])  # drop the r lowest bottoms
        add(order_max[self.r:])  # drop the r highest tops

        for _ in range(10000):
            A = [k[0] for k in rows]
            b = [k[1] for k in rows]
            body = ConvexBody(A, b)
            try:
                _, z = _lex_optimum(body, v, which)
            except EmptyBody:
                # The relaxation contains P, so P itself is empty.
                raise EmptyBody("robust hull intersection is empty")
            R = self.violated_removal(z)
            if R is None:
                return z
            add(i for i in range(self.n) if i not in R)
        raise InternalError("cutting plane failed to converge")

    def width_extremes(self, v):
        """(low point, high point) of P in direction v, both in P."""
        return self.extreme(v, MIN), self.extreme(v, MAX)
