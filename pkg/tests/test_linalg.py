"""Fraction-free linear algebra over the rational function field."""

import random
from fractions import Fraction

from daerealize.linalg import FFMatrix, SolveTag, det_of, ff_solve, rank_of
from daerealize.mpoly import MPoly
from daerealize.ratfunc import RatFunc
from daerealize.variables import param, state

from support import rand_ratfunc

X = state("x")
K = param("k")


def R(n, d=1):
    return RatFunc.const(Fraction(n, d))


def test_unique_solve_known_system():
    # 2a + b = 5, a - b = 1  ->  a = 2, b = 1
    a = FFMatrix.from_rows([[R(2), R(1)], [R(1), R(-1)]])
    res = ff_solve(a, [R(5), R(1)])
    assert res.tag is SolveTag.UNIQUE
    assert res.solution == [R(2), R(1)]
    assert res.rank == 2


def test_symbolic_entries_divide_exactly():
    x = RatFunc.var(X)
    a = FFMatrix.from_rows([[x, R(1)], [R(1), x]])
    res = ff_solve(a, [x * x + R(1), x + x])
    assert res.tag is SolveTag.UNIQUE
    assert res.solution == [x, R(1)]


def test_inconsistent_detected():
    a = FFMatrix.from_rows([[R(1), R(1)], [R(2), R(2)]])
    res = ff_solve(a, [R(1), R(3)])
    assert res.tag is SolveTag.INCONSISTENT
    assert res.solution is None


def test_underdetermined_returns_particular_and_nullspace():
    a = FFMatrix.from_rows([[R(1), R(1)]])
    res = ff_solve(a, [R(4)])
    assert res.tag is SolveTag.SPACE
    assert len(res.nullspace) == 1
    # particular solution satisfies the equation
    s = res.solution
    assert s[0] + s[1] == R(4)
    v = res.nullspace[0]
    assert v[0] + v[1] == R(0)
    assert any(not c.is_zero() for c in v)


def test_random_solves_verify_residually():
    rng = random.Random(17)
    pool = [X, K]
    for _ in range(15):
        n = rng.randint(1, 3)
        a = FFMatrix.from_rows(
            [[rand_ratfunc(rng, pool, max_terms=2, max_deg=1)
              for _ in range(n)] for _ in range(n)])
        xs = [rand_ratfunc(rng, pool, max_terms=2, max_deg=1)
              for _ in range(n)]
        b = []
        for i in range(n):
            acc = RatFunc.zero()
            for j in range(n):
                acc = acc + a.entry(i, j) * xs[j]
            b.append(acc)
        res = ff_solve(a, b)
        assert res.tag is not SolveTag.INCONSISTENT
        s = res.solution
        for i in range(n):
            acc = RatFunc.zero()
            for j in range(n):
                acc = acc + a.entry(i, j) * s[j]
            assert acc == b[i]


def test_rank_of_known_matrices():
    assert rank_of(FFMatrix.from_rows([[R(1), R(2)], [R(2), R(4)]])) == 1
    assert rank_of(FFMatrix.from_rows([[R(1), R(0)], [R(0), R(1)]])) == 2
    assert rank_of(FFMatrix.from_rows([[R(0), R(0)]])) == 0


def test_det_of_matches_cofactor_expansion():
    rng = random.Random(19)
    pool = [X, K]
    for _ in range(10):
        e = [[rand_ratfunc(rng, pool, max_terms=2, max_deg=1)
              for _ in range(3)] for _ in range(3)]
        cof = (e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
               - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
               + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))
        assert det_of(FFMatrix.from_rows(e)) == cof


def test_det_of_singular_is_zero():
    x = RatFunc.var(X)
    a = FFMatrix.from_rows([[x, x], [x, x]])
    assert det_of(a).is_zero()
