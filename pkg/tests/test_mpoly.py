"""Exact multivariate polynomial arithmetic."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from daerealize.mpoly import MPoly, poly_sum, poly_text
from daerealize.variables import input_jet, param, state

from support import rand_poly

X = state("x")
Y = state("z")
U = input_jet()
POOL = [X, Y, U]


def mk(seed):
    return rand_poly(random.Random(seed), POOL, max_terms=5, max_deg=3)


polys = st.integers(min_value=0, max_value=10 ** 6).map(mk)


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MPoly.zero()
    assert p * MPoly.const(Fraction(1)) == p


@given(polys)
@settings(max_examples=60)
def test_univariate_view_reassembles(p):
    x_poly = MPoly.var(X)
    rebuilt = poly_sum(c * x_poly ** e for e, c in p.as_univariate(X).items())
    assert rebuilt == p
    assert poly_sum(c * x_poly ** i
                    for i, c in enumerate(p.coeffs_in(X))) == p


@given(polys, polys)
@settings(max_examples=60)
def test_degree_of_product_adds(p, q):
    if p.is_zero() or q.is_zero():
        return
    assert (p * q).degree(X) == p.degree(X) + q.degree(X)


@given(polys, polys)
@settings(max_examples=60)
def test_derivative_product_rule(p, q):
    lhs = (p * q).derivative(X)
    assert lhs == p.derivative(X) * q + p * q.derivative(X)


def test_derivative_basics():
    p = MPoly.var(X, 3) + MPoly.const(Fraction(2)) * MPoly.var(X)
    assert p.derivative(X) == (MPoly.const(Fraction(3)) * MPoly.var(X, 2)
                               + MPoly.const(Fraction(2)))
    assert p.derivative(Y).is_zero()


@given(polys)
@settings(max_examples=60)
def test_primitive_signed_splits_content(p):
    if p.is_zero():
        return
    c, prim = p.primitive_signed()
    assert MPoly.const(c) * prim == p
    assert prim.primitive_signed() == (Fraction(1), prim)


def test_subs_poly_composition():
    p = MPoly.var(X, 2) + MPoly.var(Y)
    image = p.subs_poly({X: MPoly.var(Y) + MPoly.const(Fraction(1))})
    expect = (MPoly.var(Y, 2) + MPoly.const(Fraction(2)) * MPoly.var(Y)
              + MPoly.const(Fraction(1)) + MPoly.var(Y))
    assert image == expect


def test_monic_scales_leading_to_one():
    p = MPoly.const(Fraction(3)) * MPoly.var(X, 2) - MPoly.var(Y)
    assert p.monic().leading_coeff() == 1
    assert p.monic() * MPoly.const(p.leading_coeff()) == p


def test_const_round_trip():
    c = MPoly.const(Fraction(-7, 3))
    assert c.is_const() and c.const_value() == Fraction(-7, 3)
    assert MPoly.zero().is_zero()


def test_poly_text_is_canonical_and_readable():
    p = MPoly.var(X, 2) - MPoly.var(U) * MPoly.var(X) + MPoly.const(Fraction(1, 2))
    q = MPoly.const(Fraction(1, 2)) + MPoly.var(X, 2) - MPoly.var(X) * MPoly.var(U)
    assert poly_text(p) == poly_text(q)
    assert poly_text(p) == "-u*x + x^2 + 1/2"
    assert poly_text(MPoly.zero()) == "0"
    assert poly_text(MPoly.const(Fraction(-3, 4))) == "-3/4"


def test_variables_and_degree_track_support():
    p = MPoly.var(X) * MPoly.var(U, 1) ** 2
    assert p.variables() == {X, U}
    assert p.degree(U) == 2
    assert p.degree(param("k")) == 0
    assert p.total_degree() == 3
