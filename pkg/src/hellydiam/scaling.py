"""Empirical probe of how the required check size grows as delta shrinks.

For each delta: pack directions on the half-sphere so the quarter-grade
caps are pairwise disjoint (antipodal-aware), then build the lower-bound
style family K_i = conv of all packed pairs except the i-th.  Every
(m-1)-subfamily contains a full unit pair, but the whole intersection is
strictly inside the open radius-1/2 ball, so no check size below m can
certify the family: n_observed = m.

The packing count scales like delta^(-1/2) on the circle, matching the
(d-1)/2 exponent, but only monotonicity is asserted anywhere.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from random import Random

from .caps import acos_bracket, circle_grid, cos_angle_le
from .core import ConvexBody, Family
from .errors import InternalError
from .intersections import intersection_diameter
from .linalg import sq_norm, vec_scale


def thread_budget():
    raw = os.environ.get("HELLYDIAM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _packed_pair_directions(delta):
    """Greedy antipodal-aware packing with disjoint quarter-grade caps."""
    w4 = 1 - delta / 4
    gamma = 2 * w4 * w4 - 1  # cos of twice the quarter cap angle
    th_lo, _ = acos_bracket(w4)
    # Pair caps are kept apart from both antipodes, so feasible windows can
    # be only a few degrees wide: the grid must be much finer than the cap.
    per_quadrant = max(48, 6 * (int(2 / th_lo) + 1))
    kept = []
    for v in circle_grid(per_quadrant, half=True):
        ok = True
        for u in kept:
            if not (cos_angle_le(v, u, gamma)
                    and cos_angle_le(tuple(-x for x in v), u, gamma)):
                ok = False
                break
        if ok:
            kept.append(v)
    return kept


def _claim_style_family(dirs):
    # circle_grid vectors are (1-t^2, 2t) with |v|^2 = (1+t^2)^2, so the
    # exact scale onto the radius-1/2 circle is rational.
    from .linalg import rational_sqrt

    pairs = []
    for v in dirs:
        norm = rational_sqrt(sq_norm(v))
        if norm is None:
            raise InternalError("grid direction with irrational norm")
        p = vec_scale(Fraction(1, 2) / norm, v)
        pairs.append((p, vec_scale(Fraction(-1), p)))
    from .core import Segment

    bodies = []
    for i in range(len(pairs)):
        cloud = []
        for j, (p, q) in enumerate(pairs):
            if j != i:
                cloud.append(p)
                cloud.append(q)
        if len(cloud) == 2:
            bodies.append(ConvexBody.from_segment(Segment(*cloud)))
        else:
            bodies.append(ConvexBody.from_points(cloud))
    return Family.of(bodies), pairs


def scaling_experiment(dim, delta_grid, trials, seed):
    """Rows of (delta, n_observed, trials, verified) per delta value."""
    if dim != 2:
        raise ValueError("the scaling probe is desk-scale: d = 2 only")
    rows = []
    if trials <= 0:
        return rows
    rng = Random(seed)
    for delta in delta_grid:
        delta = Fraction(delta)
        dirs = _packed_pair_directions(delta)
        m = len(dirs)
        if m < 2:
            raise InternalError(f"packing degenerate at delta={delta}")
        family, pairs = _claim_style_family(dirs)

        got = intersection_diameter(list(family.bodies))
        whole_thin = got is None or got[0] < 1

        picks = [rng.randint(0, m - 1) for _ in range(trials)]

        def one_trial(i0):
            p, q = pairs[i0]
            return all(family[j].contains(p) and family[j].contains(q)
                       for j in range(m) if j != i0)

        budget = thread_budget()
        if budget > 1:
            with ThreadPoolExecutor(max_workers=budget) as pool:
                outcomes = list(pool.map(one_trial, picks))
        else:
            outcomes = [one_trial(i0) for i0 in picks]
        rows.append({
            "delta": delta,
            "n_observed": m,
            "trials": trials,
            "verified": whole_thin and all(outcomes),
        })
    return rows


def rows_to_csv(rows):
    """Fixed header contract: delta,n_observed,trials."""
    lines = ["delta,n_observed,trials"]
    for row in rows:
        lines.append(f"{float(row['delta'])},{row['n_observed']},{row['trials']}")
    return "\n".join(lines) + "\n"
