import itertools
import random
from fractions import Fraction

import pytest

from relnorms.errors import InputError
from relnorms.exact import RationalMatrix, solve_linear
from relnorms.lp import LpProblem, lp_solve


def test_spec_examples():
    r = lp_solve(LpProblem([1], [[1]], [3], [">="], [(None, None)]))
    assert r.status == "optimal" and r.value == 3 and r.witness == (3,)
    assert lp_solve(LpProblem([1], [[1]], [0], [">="]), "max").status == "unbounded"
    r = lp_solve(LpProblem([0], [[1], [1]], [0, 1], ["<=", ">="], [(None, None)]))
    assert r.status == "infeasible"


def test_mixed_bounds():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    r = lp_solve(LpProblem([3, 2], [[1, 1], [1, 3]], [4, 6], ["<=", "<="], [(0, 3), (0, None)]), "max")
    assert r.value == 11 and r.witness == (3, 1)
    r = lp_solve(LpProblem([1, 1], [[1, -1]], [Fraction(1, 2)], bounds=[(-2, 5), (None, -1)]))
    # y = x - 1/2 <= -1 forces x <= -1/2; the minimum sits at x = -2
    assert r.value == Fraction(-9, 2) and r.witness == (-2, Fraction(-5, 2))


def test_bad_problem():
    with pytest.raises(InputError):
        LpProblem([1, 2], [[1]], [0])
    with pytest.raises(InputError):
        LpProblem([1], [[1]], [0], ["=="])
    with pytest.raises(InputError):
        LpProblem([1], [[1]], [0], bounds=[(2, 1)])
    with pytest.raises(InputError):
        lp_solve(LpProblem([1], [[1]], [0]), "sideways")


def vertex_oracle(c, A, b, upper):
    """Minimum of c.x over {A x = b, 0 <= x <= upper} by enumerating basic solutions."""
    m, n = len(A), len(c)
    best = None
    for basis in itertools.combinations(range(n), m):
        rest = [j for j in range(n) if j not in basis]
        for at_upper in itertools.product((0, 1), repeat=len(rest)):
            fixed = {j: (upper if u else 0) for j, u in zip(rest, at_upper)}
            rhs = [b[i] - sum(A[i][j] * v for j, v in fixed.items()) for i in range(m)]
            sub = RationalMatrix([[A[i][j] for j in basis] for i in range(m)], m)
            xb = solve_linear(sub, rhs)
            if xb is None:
                continue
            x = dict(fixed)
            x.update(zip(basis, xb))
            if all(0 <= x[j] <= upper for j in range(n)) and \
                    all(sum(A[i][j] * x[j] for j in range(n)) == b[i] for i in range(m)):
                val = sum(c[j] * x[j] for j in range(n))
                best = val if best is None else min(best, val)
    return best


def test_against_vertex_enumeration():
    rng = random.Random(3)
    agree = 0
    for _ in range(150):
        n, m = rng.randint(2, 4), rng.randint(1, 2)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-4, 4) for _ in range(m)]
        c = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
        expect = vertex_oracle(c, A, b, 4)
        r = lp_solve(LpProblem(c, A, b, bounds=[(0, 4)] * n))
        if expect is None:
            assert r.status == "infeasible"
        else:
            assert r.status == "optimal" and r.value == expect
            agree += 1
    assert agree > 30


def test_degenerate_problem_terminates():
    # a classic cycling example for the largest-coefficient rule
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [Fraction(1, 2), -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
    r = lp_solve(LpProblem(c, A, [0, 0, 1], ["<=", "<=", "<="]))
    assert r.status == "optimal" and r.value == Fraction(-1, 20)
