"""Rational general solutions of the first-order coefficient ODEs.

Positive families are checked against the defining equation itself: with
a standing for dy/du, a family y0(u, c) must satisfy
h0(d y0/du, y0, u) = 0 identically.  Negative answers are classical: a
nonrational antiderivative, a non-integer residue, or a transcendental
general solution.
"""

import random
from fractions import Fraction

import pytest

from daerealize.errors import UnsupportedError
from daerealize.mpoly import MPoly
from daerealize.ratfunc import RatFunc, poly_subs
from daerealize.srgs import srgs_solve
from daerealize.variables import ansatz, input_jet, output_jet, param

A = ansatz("a")
C = ansatz("c")
Y = output_jet(0)
U = input_jet(0)


def solves(h0, family):
    """The family satisfies h0 with a := d(expr)/du."""
    image = poly_subs(h0, {A: family.expr.derivative(U), Y: family.expr})
    return image.is_zero()


def build(a_coeff, rest):
    return MPoly.var(A) * a_coeff + rest


def test_pure_integration():
    one = MPoly.const(Fraction(1))
    h0 = build(one, -one)                       # a = 1
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    assert fam.expr == RatFunc.var(U) + RatFunc.var(C)


def test_pure_integration_without_rational_antiderivative():
    h0 = MPoly.var(A) * MPoly.var(U) - MPoly.const(Fraction(1))   # a = 1/u
    assert srgs_solve(h0, A, Y, C) is None


def test_homogeneous_integer_residue():
    h0 = MPoly.var(A) * MPoly.var(U) - MPoly.var(Y)               # a = y/u
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    assert fam.expr == RatFunc.var(U) * RatFunc.var(C)


def test_homogeneous_double_residue():
    h0 = MPoly.var(A) * MPoly.var(U) - MPoly.const(Fraction(2)) * MPoly.var(Y)
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    assert fam.expr == RatFunc.var(U) ** 2 * RatFunc.var(C)


def test_exponential_growth_has_no_rational_family():
    h0 = MPoly.var(A) - MPoly.var(Y)                              # y' = y
    assert srgs_solve(h0, A, Y, C) is None


def test_fractional_residue_is_a_no():
    h0 = (MPoly.const(Fraction(2)) * MPoly.var(A) * MPoly.var(U)
          - MPoly.var(Y))                                          # y' = y/(2u)
    assert srgs_solve(h0, A, Y, C) is None


def test_symbolic_residue_is_a_no():
    k = param("k")
    h0 = MPoly.var(A) * MPoly.var(U) - MPoly.var(k) * MPoly.var(Y)
    assert srgs_solve(h0, A, Y, C) is None


def test_integrating_factor_with_quadratic_denominator():
    # y' = 2u y / (u^2 + 1): families c*(u^2 + 1)
    den = MPoly.var(U, 2) + MPoly.const(Fraction(1))
    h0 = MPoly.var(A) * den - MPoly.const(Fraction(2)) * MPoly.var(U) * MPoly.var(Y)
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    c = RatFunc.var(C)
    u = RatFunc.var(U)
    assert fam.expr == c * (u * u + RatFunc.const(Fraction(1)))


def test_arctan_kernel_is_a_no():
    den = MPoly.var(U, 2) + MPoly.const(Fraction(1))
    h0 = MPoly.var(A) * den - MPoly.var(Y)
    assert srgs_solve(h0, A, Y, C) is None


def test_inhomogeneous_linear():
    # y' = (y + u^2)/u: families u^2 + u c
    h0 = MPoly.var(A) * MPoly.var(U) - MPoly.var(Y) - MPoly.var(U, 2)
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    u = RatFunc.var(U)
    assert fam.expr == u * u + u * RatFunc.var(C)


def test_riccati_with_rational_general_solution():
    # y' = (y - u)^2 + 1 has particular solution u and rational families
    y, u = MPoly.var(Y), MPoly.var(U)
    rhs = (y - u) ** 2 + MPoly.const(Fraction(1))
    h0 = MPoly.var(A) - rhs
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)


def test_riccati_without_polynomial_particular_is_undecided():
    # y' = y^2 + 1 integrates to the tangent; the bounded particular
    # search must give up rather than answer no
    h0 = MPoly.var(A) - MPoly.var(Y, 2) - MPoly.const(Fraction(1))
    with pytest.raises(UnsupportedError):
        srgs_solve(h0, A, Y, C)


def test_riccati_degree_bound_is_honored():
    h0 = MPoly.var(A) - MPoly.var(Y, 2) - MPoly.const(Fraction(1))
    with pytest.raises(UnsupportedError):
        srgs_solve(h0, A, Y, C, riccati_degree=2)


def test_cubic_right_hand_side_is_undecided():
    h0 = MPoly.var(A) - MPoly.var(Y, 3)
    with pytest.raises(UnsupportedError):
        srgs_solve(h0, A, Y, C)


def test_nonlinear_in_the_derivative_is_undecided():
    h0 = MPoly.var(A, 2) - MPoly.var(Y)
    with pytest.raises(UnsupportedError):
        srgs_solve(h0, A, Y, C)


def test_parameters_ride_along():
    k = param("k")
    h0 = MPoly.var(A) - MPoly.var(k)                              # y' = k
    fam = srgs_solve(h0, A, Y, C)
    assert fam is not None and solves(h0, fam)
    assert fam.expr == (RatFunc.var(U) * RatFunc.var(k)
                        + RatFunc.var(C))


def test_every_family_exposes_its_constant():
    h0 = MPoly.var(A) - MPoly.const(Fraction(1))
    fam = srgs_solve(h0, A, Y, C)
    assert fam.constant == C
    assert C in fam.expr.variables()


def test_random_linear_equations_verify_on_solution():
    # generic y' = (p/d)y + q/d rarely has a rational general solution,
    # so mix fully random shapes with ones built to be solvable: pure
    # quadratures (p = 0) and integer-residue homogeneous parts (p/d = n/u)
    rng = random.Random(29)
    u = MPoly.var(U)
    found = 0
    for i in range(60):
        shape = i % 3
        if shape == 0:
            p, d = MPoly.zero(), u ** rng.randint(0, 1)
        elif shape == 1:
            p, d = MPoly.const(Fraction(rng.randint(-2, 2))), u
        else:
            p = sum((MPoly.const(Fraction(rng.randint(-2, 2))) * u ** j
                     for j in range(2)), MPoly.zero())
            d = u ** rng.randint(0, 1)
        q = sum((MPoly.const(Fraction(rng.randint(-2, 2))) * u ** j
                 for j in range(2)), MPoly.zero())
        h0 = MPoly.var(A) * d - p * MPoly.var(Y) - q
        if h0.degree(A) != 1:
            continue
        try:
            fam = srgs_solve(h0, A, Y, C)
        except UnsupportedError:
            continue
        if fam is None:
            continue
        assert solves(h0, fam)
        assert C in fam.expr.variables()
        found += 1
    assert found >= 10
