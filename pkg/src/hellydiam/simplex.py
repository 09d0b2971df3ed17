"""Exact rational two-phase simplex with Bland's rule.

No tolerances anywhere: all comparisons are exact Fraction comparisons and
Bland's rule guarantees termination.  Problem sizes here are tiny (a few
variables, tens of rows), so a dense tableau is plenty.

General form accepted by :func:`solve`:

    min / max  c . x
    s.t.       A_ub x <= b_ub
               A_eq x == b_eq
               x >= 0 componentwise if nonneg, else free

Free variables are split x = p - m internally.
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

F0 = Fraction(0)
F1 = Fraction(1)


class LpResult:
    __slots__ = ("status", "value", "x")

    def __init__(self, status, value=None, x=None):
        self.status = status
        self.value = value
        self.x = x

    def __repr__(self):
        return f"LpResult({self.status}, value={self.value}, x={self.x})"


def _pivot(rows, cost, basis, r, c):
    piv = rows[r][c]
    if piv != 1:
        inv = F1 / piv
        rows[r] = [x * inv if x else x for x in rows[r]]
    prow = rows[r]
    for i in range(len(rows)):
        if i != r:
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y if y else x
                           for x, y in zip(rows[i], prow)]
    f = cost[c]
    if f:
        cost[:] = [x - f * y if y else x for x, y in zip(cost, prow)]
    basis[r] = c


def _bland_min(rows, cost, basis, ncols):
    """Run Bland-rule simplex to optimality on a canonical tableau.

    rows[i] has ncols coefficients plus the rhs in the last slot; rhs >= 0
    is maintained.  cost is the reduced-cost row (cost[-1] = -objective).
    """
    m = len(rows)
    while True:
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        best_key = None
        best_row = -1
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                key = (rows[i][-1] / a, basis[i])
                if best_key is None or key < best_key:
                    best_key = key
                    best_row = i
        if best_row < 0:
            return UNBOUNDED
        _pivot(rows, cost, basis, best_row, enter)


def _solve_standard(A, b, c):
    """min c.x s.t. A x = b, x >= 0.  Returns (status, value, x)."""
    m = len(A)
    n = len(c)
    rows = []
    for i in range(m):
        row = list(A[i])
        rhs = b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        row.append(rhs)
        rows.append(row)

    # Phase 1: artificial basis, minimize artificial sum.
    total = n + m
    for i in range(m):
        art = [F0] * m
        art[i] = F1
        rows[i] = rows[i][:n] + art + [rows[i][n]]
    basis = [n + i for i in range(m)]
    cost = [F0] * (total + 1)
    for j in range(n):
        s = F0
        for i in range(m):
            s += rows[i][j]
        cost[j] = -s
    s = F0
    for i in range(m):
        s += rows[i][-1]
    cost[-1] = -s

    _bland_min(rows, cost, basis, total)
    if -cost[-1] != 0:
        return INFEASIBLE, None, None

    # Drive leftover artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if basis[i] >= n:
            piv = -1
            for j in range(n):
                if rows[i][j] != 0:
                    piv = j
                    break
            if piv < 0:
                continue  # redundant constraint
            _pivot(rows, cost, basis, i, piv)
        keep.append(i)
    rows = [rows[i][:n] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2 reduced costs for the real objective.
    cost = list(c) + [F0]
    for i, bv in enumerate(basis):
        f = cost[bv]
        if f:
            for j in range(n + 1):
                if rows[i][j]:
                    cost[j] -= f * rows[i][j]

    status = _bland_min(rows, cost, basis, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None

    x = [F0] * n
    for i, bv in enumerate(basis):
        x[bv] = rows[i][-1]
    return OPTIMAL, -cost[-1], x


def solve(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None,
          nonneg=False, sense="min"):
    """Solve the general-form LP described in the module docstring."""
    A_ub = A_ub or []
    b_ub = b_ub or []
    A_eq = A_eq or []
    b_eq = b_eq or []
    n = len(c)
    for row in A_ub:
        if len(row) != n:
            raise ValueError("A_ub row length mismatch")
    for row in A_eq:
        if len(row) != n:
            raise ValueError("A_eq row length mismatch")

    c = [Fraction(x) for x in c]
    if sense == "max":
        c = [-x for x in c]
    elif sense != "min":
        raise ValueError(f"bad sense {sense!r}")

    width = n if nonneg else 2 * n
    nslack = len(A_ub)

    def expand(row):
        if nonneg:
            out = [Fraction(x) for x in row]
        else:
            out = []
            for x in row:
                x = Fraction(x)
                out.append(x)
            out += [-x for x in out]
        return out

    A_std = []
    b_std = []
    for k, row in enumerate(A_ub):
        r = expand(row) + [F0] * nslack
        r[width + k] = F1
        A_std.append(r)
        b_std.append(Fraction(b_ub[k]))
    for k, row in enumerate(A_eq):
        A_std.append(expand(row) + [F0] * nslack)
        b_std.append(Fraction(b_eq[k]))

    c_std = (c if nonneg else c + [-x for x in c]) + [F0] * nslack
    status, value, xs = _solve_standard(A_std, b_std, c_std)
    if status != OPTIMAL:
        return LpResult(status)

    if nonneg:
        x = xs[:n]
    else:
        x = [xs[j] - xs[n + j] for j in range(n)]
    if sense == "max":
        value = -value
    return LpResult(OPTIMAL, value, x)
