import random
from fractions import Fraction as F

from hellydiam import simplex


def test_basic_max():
    res = simplex.solve([1, 0], A_ub=[[1, 0], [-1, 0], [0, 1], [0, -1]],
                        b_ub=[1, 0, 1, 0], sense="max")
    assert res.status == simplex.OPTIMAL
    assert res.value == 1


def test_infeasible():
    res = simplex.solve([1], A_ub=[[1], [-1]], b_ub=[0, -1], sense="max")
    assert res.status == simplex.INFEASIBLE


def test_unbounded():
    res = simplex.solve([1], A_ub=[[-1]], b_ub=[0], sense="max")
    assert res.status == simplex.UNBOUNDED


def test_equality_constraints():
    # lambda >= 0, sum = 1, 2 lambda_1 + lambda_2 = 3/2
    res = simplex.solve([0, 0], A_eq=[[1, 1], [2, 1]], b_eq=[1, F(3, 2)],
                        nonneg=True)
    assert res.status == simplex.OPTIMAL
    assert res.x == [F(1, 2), F(1, 2)]


def test_degenerate_terminates():
    # Beale's cycling example; Bland's rule must terminate at -1/20.
    A = [[F(1, 4), -60, F(-1, 25), 9],
         [F(1, 2), -90, F(-1, 50), 3],
         [0, 0, 1, 0]]
    b = [0, 0, 1]
    c = [F(-3, 4), 150, F(-1, 50), 6]
    res = simplex.solve(c, A_ub=A, b_ub=b, nonneg=True)
    assert res.status == simplex.OPTIMAL
    assert res.value == F(-1, 20)


def test_random_lp_matches_vertex_enumeration(rng=None):
    """Oracle: for bounded 2-D polytopes the LP optimum is the best vertex."""
    from hellydiam.core import ConvexBody, solve_lp, vertices, MAX
    from hellydiam.linalg import dot

    rng = random.Random(99)
    for _ in range(40):
        lows = [F(rng.randint(-8, 0), 4) for _ in range(2)]
        highs = [lo + F(rng.randint(1, 8), 4) for lo in lows]
        body = ConvexBody.box(lows, highs)
        extra = (F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
        if any(extra):
            mid = tuple((a + b) / 2 for a, b in zip(lows, highs))
            body = ConvexBody(list(body.A) + [extra],
                              list(body.b) + [dot(extra, mid) + 1])
        obj = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        if not any(obj):
            continue
        out = solve_lp(obj, body, MAX)
        assert out.status == simplex.OPTIMAL
        best = max(dot(obj, v) for v in vertices(body))
        assert out.value == best
