"""Rational parametrization of plane curves of the shapes the solvers produce.

Two constructive strategies, both yielding proper parametrizations:

* curves linear in one of the two variables: solve for it, the other
  variable is the parameter;
* irreducible conics with rational coefficients: find a rational point by
  bounded height search, then intersect with the pencil of lines through it.

Anything else raises UnsupportedError.  Genuine nonexistence (conics
without rational points) is not certified, only reported as unsupported,
since the point search is bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DaerealizeError, UnsupportedError
from .factor import factor
from .mpoly import MPoly
from .polytools import poly_gcd
from .ratfunc import RatFunc, poly_subs
from .variables import Kind, Var


@dataclass(frozen=True)
class CurveParam:
    """components[i](parameter) traces out the i-th coordinate."""

    parameter: Var
    components: tuple[RatFunc, ...]


def _rational_heights(bound: int) -> list[Fraction]:
    cands = set()
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            cands.add(Fraction(p, q))
    return sorted(cands, key=lambda f: (max(abs(f.numerator), f.denominator),
                                        abs(f), 0 if f >= 0 else 1))


def _isqrt_exact(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def parametrize_plane_curve(f: MPoly, v1: Var, v2: Var, parameter: Var,
                            height_bound: int = 10) -> CurveParam:
    """Proper rational parametrization of the irreducible curve f(v1, v2) = 0.

    Components are returned in (v1, v2) order as functions of ``parameter``.
    """
    if f.is_zero() or f.is_const():
        raise ValueError("not a curve")
    t = RatFunc.var(parameter)
    # linear in one variable: the other variable parametrizes
    for solved, free in ((v1, v2), (v2, v1)):
        if f.degree(solved) == 1:
            a = f.coeff_in(solved, 1)
            b = f.coeff_in(solved, 0)
            expr = poly_subs(b, {free: t})
            lead = poly_subs(a, {free: t})
            val = RatFunc.const(Fraction(0)) - expr / lead
            comps = (t, val) if solved is v2 else (val, t)
            return CurveParam(parameter=parameter, components=comps)
    deg = max(sum(e for v, e in mono if v in (v1, v2)) for mono in f.terms)
    if deg != 2:
        raise UnsupportedError("curve is neither linear in a variable nor a conic")
    for mono, _c in f.terms.items():
        if any(v not in (v1, v2) for v, _e in mono):
            raise UnsupportedError("conic has non-rational coefficients")
    fz = factor(f)
    if len(fz.factors) != 1 or fz.factors[0][1] != 1:
        raise UnsupportedError("conic is reducible")
    point = None
    for x0 in _rational_heights(height_bound):
        sect = poly_subs(f, {v1: RatFunc.const(x0)})
        if not sect.is_polynomial():
            raise DaerealizeError("conic slice is not polynomial")
        sl = sect.as_poly()
        d = sl.degree(v2)
        if d <= 0:
            continue
        if d == 1:
            y0 = -sl.coeff_in(v2, 0).const_value() / sl.coeff_in(v2, 1).const_value()
            point = (x0, y0)
            break
        a = sl.coeff_in(v2, 2).const_value()
        b = sl.coeff_in(v2, 1).const_value()
        c = sl.coeff_in(v2, 0).const_value()
        root = _isqrt_exact(b * b - 4 * a * c)
        if root is None:
            continue
        point = (x0, (-b + root) / (2 * a))
        break
    if point is None:
        raise UnsupportedError(
            f"no rational point on the conic up to height {height_bound}")
    x0, y0 = point
    # pencil of lines through the point: v1 = x0 + s, v2 = y0 - t*s
    svar = Var(Kind.ANSATZ, "_pencil")
    s = RatFunc.var(svar)
    sub = poly_subs(f, {v1: RatFunc.const(x0) + s,
                        v2: RatFunc.const(y0) - t * s})
    if not sub.is_polynomial():
        raise DaerealizeError("pencil substitution is not polynomial")
    p = sub.as_poly()
    c2 = p.coeff_in(svar, 2)
    c1 = p.coeff_in(svar, 1)
    if not p.coeff_in(svar, 0).is_zero():
        raise DaerealizeError("base point is not on the conic")
    if c2.is_zero() or c1.is_zero():
        raise UnsupportedError("conic is degenerate at the base point")
    s_root = RatFunc.const(Fraction(0)) - RatFunc(c1) / RatFunc(c2)
    chi1 = RatFunc.const(x0) + s_root
    chi2 = RatFunc.const(y0) - t * s_root
    if not poly_subs(f, {v1: chi1, v2: chi2}).is_zero():
        raise DaerealizeError("parametrization does not satisfy the curve")
    return CurveParam(parameter=parameter, components=(chi1, chi2))


def check_properness(components, parameter: Var) -> bool:
    """Is the parametrization injective for generic parameter values?

    Compares the map at two symbolic parameter values: the gcd of the
    cross differences must be linear in the parameter.
    """
    mirror = Var(Kind.ANSATZ, parameter.name + "_mirror")
    swap = {parameter: RatFunc.var(mirror)}
    g = None
    for chi in components:
        if mirror in chi.variables():
            raise DaerealizeError("mirror variable collides with component")
        n_s = poly_subs(chi.num, swap).num
        d_s = poly_subs(chi.den, swap).num
        h = chi.num * d_s - n_s * chi.den
        if h.is_zero():
            continue
        g = h if g is None else poly_gcd(g, h)
    if g is None:
        return False
    return g.degree(parameter) == 1
