"""Exact factorization over Q for the polynomial shapes the solvers meet.

General multivariate factorization is not attempted.  Covered here, which is
enough for the elimination and integration routines downstream:

* rational content and squarefree splitting, always;
* univariate polynomials up to a degree cap, by modular factorization;
* multivariate polynomials that are linear or quadratic in some variable
  (content split plus discriminant test).

Everything else raises UnsupportedError carrying the squarefree
decomposition, so callers can degrade honestly instead of treating a
possibly reducible polynomial as irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DaerealizeError, UnsupportedError
from .mpoly import MPoly, poly_sum, poly_text
from .polytools import content_in, divexact, squarefree_decomposition
from .polytools import poly_sqrt
from .unifactor import factor_squarefree_int
from .variables import Var

UNI_DEGREE_CAP = 12


@dataclass(frozen=True)
class Factorization:
    """p = constant * prod(f**m for f, m in factors), factors irreducible."""

    constant: Fraction
    factors: tuple[tuple[MPoly, int], ...]

    def irreducibles(self) -> list[MPoly]:
        return [f for f, _ in self.factors]


def _sort_key(f: MPoly):
    return (f.total_degree(), poly_text(f))


def _uni_factors(f: MPoly, v: Var) -> list[MPoly]:
    d = f.degree(v)
    if d > UNI_DEGREE_CAP:
        raise UnsupportedError(
            f"univariate degree {d} above factorization cap {UNI_DEGREE_CAP}")
    dense = []
    for c in f.coeffs_in(v):
        val = c.const_value()
        if val is None:
            raise DaerealizeError("univariate factor input is not univariate")
        dense.append(val)
    den = lcm(*(c.denominator for c in dense)) if dense else 1
    ints = [int(c * den) for c in dense]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    out = []
    for fac in factor_squarefree_int(ints):
        out.append(poly_sum(MPoly.const(Fraction(c)) * MPoly.var(v, i)
                            for i, c in enumerate(fac) if c))
    return out


def _factor_squarefree(f: MPoly) -> list[MPoly]:
    """Irreducible factors of a squarefree f, each primitive with positive
    leading coefficient, rational constants dropped."""
    if f.is_const():
        return []
    vars_ = sorted(f.variables())
    if len(vars_) == 1:
        return _uni_factors(f, vars_[0])
    pick = None
    for v in vars_:
        d = f.degree(v)
        if d in (1, 2) and (pick is None or d < f.degree(pick)):
            pick = v
    if pick is None:
        raise UnsupportedError("no variable of degree at most two to split on")
    v = pick
    cont = content_in(f, v)
    prim = divexact(f, cont)
    out = _factor_squarefree(cont)
    prim = prim.primitive_signed()[1]
    if prim.degree(v) == 1:
        out.append(prim)
    else:
        c0, c1, c2 = prim.coeffs_in(v)
        disc = c1 * c1 - MPoly.const(Fraction(4)) * c2 * c0
        root = poly_sqrt(disc)
        if root is None:
            out.append(prim)
        else:
            two_av = MPoly.const(Fraction(2)) * c2 * MPoly.var(v)
            for half in (two_av + c1 + root, two_av + c1 - root):
                piece = divexact(half, content_in(half, v))
                out.append(piece.primitive_signed()[1])
    return out


def factor(p: MPoly) -> Factorization:
    """Factor p into irreducibles, verifying the product reconstructs p.

    Raises UnsupportedError with a ``squarefree`` payload when p falls
    outside the supported shapes.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    const, pieces = squarefree_decomposition(p)
    if p.is_const():
        return Factorization(p.const_value(), ())
    try:
        collected: dict[MPoly, int] = {}
        for f, mult in pieces:
            for g in _factor_squarefree(f):
                collected[g] = collected.get(g, 0) + mult
    except UnsupportedError as exc:
        raise UnsupportedError(
            exc.reason, payload={"constant": const, "squarefree": pieces}
        ) from exc
    factors = tuple(sorted(collected.items(), key=lambda it: _sort_key(it[0])))
    prod = MPoly.const(Fraction(1))
    for f, m in factors:
        prod = prod * f**m
    pm, pc = p.leading()
    qm, qc = prod.leading()
    if pm != qm:
        raise DaerealizeError("factorization lost the leading monomial")
    ratio = pc / qc
    if p - MPoly.const(ratio) * prod:
        raise DaerealizeError("factorization failed to reconstruct its input")
    return Factorization(ratio, factors)
