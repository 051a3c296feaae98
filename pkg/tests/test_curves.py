"""Plane curve parametrization and properness."""

from fractions import Fraction

import pytest

from daerealize.curves import check_properness, parametrize_plane_curve
from daerealize.errors import UnsupportedError
from daerealize.mpoly import MPoly
from daerealize.ratfunc import RatFunc, poly_subs
from daerealize.variables import ansatz, state

A = ansatz("a")
B = ansatz("b")
T = state("t")


def on_curve(f, cp):
    image = poly_subs(f, {A: cp.components[0], B: cp.components[1]})
    return image.is_zero()


def test_line():
    f = MPoly.var(A) + MPoly.var(B) - MPoly.const(Fraction(1))
    cp = parametrize_plane_curve(f, A, B, T)
    assert on_curve(f, cp)
    assert check_properness(cp.components, T)


def test_parabola_solved_for_the_linear_variable():
    f = MPoly.var(B) - MPoly.var(A, 2)
    cp = parametrize_plane_curve(f, A, B, T)
    assert cp.components == (RatFunc.var(T), RatFunc.var(T) ** 2)
    assert check_properness(cp.components, T)


def test_rational_in_a_variable():
    # a*b^2 - 1 is linear in a: a = 1/b^2
    f = MPoly.var(A) * MPoly.var(B, 2) - MPoly.const(Fraction(1))
    cp = parametrize_plane_curve(f, A, B, T)
    assert on_curve(f, cp)
    assert check_properness(cp.components, T)


def test_circle_by_rational_point_and_pencil():
    f = MPoly.var(A, 2) + MPoly.var(B, 2) - MPoly.const(Fraction(1))
    cp = parametrize_plane_curve(f, A, B, T)
    assert on_curve(f, cp)
    assert check_properness(cp.components, T)
    # genuinely rational components, not a constant point
    assert any(T in c.variables() for c in cp.components)


def test_hyperbola():
    f = MPoly.var(A) * MPoly.var(B) - MPoly.const(Fraction(1))
    cp = parametrize_plane_curve(f, A, B, T)
    assert on_curve(f, cp)
    assert check_properness(cp.components, T)


def test_pointless_conic_is_not_decided():
    f = MPoly.var(A, 2) + MPoly.var(B, 2) + MPoly.const(Fraction(1))
    with pytest.raises(UnsupportedError):
        parametrize_plane_curve(f, A, B, T)


def test_higher_degree_is_not_decided():
    f = MPoly.var(B, 2) - MPoly.var(A, 3)
    with pytest.raises(UnsupportedError):
        parametrize_plane_curve(f, A, B, T)


def test_not_a_curve():
    with pytest.raises(ValueError):
        parametrize_plane_curve(MPoly.const(Fraction(2)), A, B, T)


def test_properness_rejects_a_double_cover():
    t = RatFunc.var(T)
    assert not check_properness((t ** 2, t ** 4), T)
    assert check_properness((t, t ** 2), T)


def test_properness_of_moebius_reparametrization():
    t = RatFunc.var(T)
    one = RatFunc.const(Fraction(1))
    m = (t - one) / (t + one)
    assert check_properness((m, m ** 2), T)


def test_properness_needs_the_parameter():
    one = RatFunc.const(Fraction(1))
    assert not check_properness((one, one), T)
