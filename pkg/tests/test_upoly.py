"""Univariate polynomial layer and exact rational integration.

Every produced antiderivative is checked by differentiating back, so the
positive cases are their own witness; the negative cases are classical
non-integrable fractions.
"""

import random
from fractions import Fraction

from daerealize.mpoly import MPoly
from daerealize.ratfunc import RatFunc
from daerealize.upoly import (UPoly, ext_gcd_upoly, gcd_upoly, hermite_reduce,
                              integrate_poly, rational_antiderivative,
                              upoly_of, upoly_to_rat, yun_squarefree)
from daerealize.variables import input_jet, param

from support import rand_fraction

U = input_jet()
K = param("k")


def up(*coeffs):
    """UPoly from low-to-high rational coefficients."""
    return UPoly([RatFunc.const(Fraction(c)) for c in coeffs])


def test_upoly_round_trip_through_mpoly():
    p = MPoly.var(U, 2) + MPoly.var(K) * MPoly.var(U)
    q = upoly_of(p, U)
    assert q.degree() == 2
    assert upoly_to_rat(q, U) == RatFunc(p)


def test_divmod_and_gcd():
    a = up(-1, 0, 1)            # u^2 - 1
    b = up(-1, 1)               # u - 1
    q, r = a.divmod(b)
    assert r.is_zero()
    assert q == up(1, 1)
    assert gcd_upoly(a, b).monic() == b.monic()


def test_ext_gcd_bezout_identity():
    a = up(1, 0, 1)             # u^2 + 1
    b = up(0, 1)                # u
    g, s, t = ext_gcd_upoly(a, b)
    assert (s * a + t * b).monic() == g.monic()
    assert g.degree() == 0


def test_yun_squarefree_multiplicities():
    a = up(1, 1)                # u + 1
    b = up(-2, 1)               # u - 2
    p = a * a * a * b
    parts = yun_squarefree(p.monic())
    mults = sorted(m for _f, m in parts)
    assert mults == [1, 3]
    rebuilt = UPoly.const(RatFunc.const(Fraction(1)))
    for f, m in parts:
        for _ in range(m):
            rebuilt = rebuilt * f
    assert rebuilt.monic() == p.monic()


def test_integrate_poly_inverts_derivative():
    rng = random.Random(23)
    for _ in range(20):
        p = UPoly([RatFunc.const(rand_fraction(rng, 5)) for _ in range(4)])
        assert integrate_poly(p).derivative() == p


def test_hermite_reduce_identity():
    # 1 / (u^2 (u+1)) has hermite part -1/u plus a log remainder
    d = (up(0, 1) * up(0, 1) * up(1, 1)).monic()
    a = up(1)
    g, a_star, d_star = hermite_reduce(a, d, U)
    lhs = RatFunc(MPoly.const(Fraction(1)),
                  MPoly.var(U, 2) * (MPoly.var(U) + MPoly.const(Fraction(1))))
    rest = upoly_to_rat(a_star, U) / upoly_to_rat(d_star, U)
    assert g.derivative(U) + rest == lhs
    # d* is squarefree
    assert gcd_upoly(d_star, d_star.derivative()).degree() == 0
    assert not g.is_zero()


def test_rational_antiderivative_positive_cases():
    u = RatFunc.var(U)
    one = RatFunc.const(Fraction(1))
    cases = [
        u * u,
        one / (u * u),
        (u * u + one) / (u * u),
        one / ((u + one) ** 3),
    ]
    for r in cases:
        anti, ok = rational_antiderivative(r, U)
        assert ok
        assert anti.derivative(U) == r


def test_rational_antiderivative_negative_cases():
    u = RatFunc.var(U)
    one = RatFunc.const(Fraction(1))
    for r in [one / u,
              (RatFunc.const(Fraction(2)) * u) / (u * u + one),
              one / (u * u - one)]:
        anti, ok = rational_antiderivative(r, U)
        assert not ok and anti is None


def test_rational_antiderivative_with_parameters():
    k = RatFunc.var(K)
    u = RatFunc.var(U)
    anti, ok = rational_antiderivative(k * u, U)
    assert ok and anti.derivative(U) == k * u
