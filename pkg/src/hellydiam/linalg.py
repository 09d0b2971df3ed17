"""Exact rational linear algebra: solving, rank, kernels.

Everything works on lists of lists of Fraction and never leaves the
rationals.  Sizes are tiny (d <= 4 plus a handful of rows), so plain
Gaussian elimination is the right tool.
"""

import math
from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def solve_square(A, b):
    """Solve A x = b for square A.  Returns the solution vector or None if
    A is singular (no attempt to distinguish inconsistent from undetermined).
    """
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if M[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def rref(A):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    M = [list(row) for row in A]
    if not M:
        return M, []
    rows, cols = len(M), len(M[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def kernel_basis(A, ncols):
    """Basis of {x : A x = 0} in the standard rref form.

    Basis vectors are ordered by their free column index, so the first one
    is the lexicographically-first kernel basis vector in the usual sense.
    """
    R, pivots = rref(A)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F0] * ncols
        v[fc] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def rank(A):
    if not A:
        return 0
    return len(rref(A)[1])


def dot(u, v):
    s = F0
    for a, b in zip(u, v):
        s += a * b
    return s


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def sq_norm(u):
    s = F0
    for a in u:
        s += a * a
    return s


def sq_dist(u, v):
    s = F0
    for a, b in zip(u, v):
        d = a - b
        s += d * d
    return s


def rational_sqrt(x):
    """Exact square root of a nonnegative Fraction, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def orthogonal_complement_basis(u):
    """Basis of the hyperplane orthogonal to a nonzero vector u."""
    return kernel_basis([list(u)], len(u))
