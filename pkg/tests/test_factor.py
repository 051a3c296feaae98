"""Multivariate factorization into rational irreducibles."""

import random
from fractions import Fraction

import pytest
import sympy

from daerealize.errors import UnsupportedError
from daerealize.factor import UNI_DEGREE_CAP, Factorization, factor
from daerealize.mpoly import MPoly
from daerealize.variables import param, state

from support import rand_poly

X = state("x")
T = param("t")
POOL = [X, T]


def rebuild(fz: Factorization) -> MPoly:
    out = MPoly.const(fz.constant)
    for f, m in fz.factors:
        out = out * f ** m
    return out


def _to_sympy(p, syms):
    e = 0
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, k in mono:
            term *= syms[v.name] ** k
        e += term
    return e


def test_known_univariate_split():
    p = MPoly.var(X, 2) - MPoly.const(Fraction(1))
    fz = factor(p)
    assert rebuild(fz) == p
    assert {str(f) for f in fz.irreducibles()} == {"x - 1", "x + 1"}


def test_known_irreducible_stays_whole():
    p = MPoly.var(X, 2) + MPoly.const(Fraction(1))
    assert factor(p).factors == ((p, 1),)


def test_constant_is_pulled_out():
    p = MPoly.const(Fraction(2)) * (MPoly.var(X, 2) + MPoly.const(Fraction(1)))
    fz = factor(p)
    assert fz.constant == Fraction(2)
    assert rebuild(fz) == p


def test_multivariate_difference_of_squares():
    p = MPoly.var(X, 2) - MPoly.var(T, 2)
    fz = factor(p)
    assert rebuild(fz) == p
    assert len(fz.irreducibles()) == 2


def test_random_products_reconstruct_and_match_oracle():
    rng = random.Random(5)
    syms = {"x": sympy.Symbol("x"), "t": sympy.Symbol("t")}
    checked = 0
    while checked < 20:
        parts = [rand_poly(rng, POOL, max_terms=3, max_deg=2, nonzero=True)
                 for _ in range(rng.randint(1, 3))]
        p = MPoly.const(Fraction(1))
        for f in parts:
            p = p * f
        if p.is_const() or p.total_degree() > 8:
            continue
        fz = factor(p)
        assert rebuild(fz) == p
        # irreducible factor multiset must agree with an independent
        # implementation up to rational scaling
        sp = _to_sympy(p, syms)
        _, their = sympy.factor_list(sp)
        their_count = sum(m for _f, m in their)
        our_count = sum(m for _f, m in fz.factors)
        assert our_count == their_count
        for f, _m in fz.factors:
            flist = sympy.factor_list(_to_sympy(f, syms))[1]
            assert len(flist) == 1 and flist[0][1] == 1
        checked += 1


def test_multiplicities_are_detected():
    a = MPoly.var(X) + MPoly.var(T)
    fz = factor(a * a * a)
    assert [(m) for _f, m in fz.factors] == [3]


def test_degree_cap_reports_squarefree_fallback():
    p = MPoly.var(X, UNI_DEGREE_CAP + 1) - MPoly.var(X) - MPoly.const(Fraction(1))
    with pytest.raises(UnsupportedError) as ei:
        factor(p)
    payload = ei.value.payload
    assert payload is not None and "squarefree" in payload
    rebuilt = MPoly.const(payload["constant"])
    for f, m in payload["squarefree"]:
        rebuilt = rebuilt * f ** m
    assert rebuilt == p


def test_pure_power_avoids_the_cap():
    fz = factor(MPoly.var(X, UNI_DEGREE_CAP + 2))
    assert fz.factors == ((MPoly.var(X), UNI_DEGREE_CAP + 2),)
