"""Reduced rational functions num/den over the shared polynomial ring.

Canonical form: gcd(num, den) = 1 and the denominator has leading
coefficient 1 under the global order; zero is 0/1.  Equality and hashing
rely on this normalization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import PoleError
from .mpoly import MPoly
from .polytools import divexact, poly_gcd
from .variables import Var


def _coerce_poly(x) -> MPoly | None:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    if isinstance(x, Var):
        return MPoly.var(x)
    return None


def _monic_raw(num: MPoly, den: MPoly) -> "RatFunc":
    """Wrap an already-reduced pair, only normalizing the leading 1."""
    lc = den.leading_coeff()
    if lc != 1:
        num = num * (1 / lc)
        den = den * (1 / lc)
    return RatFunc._raw(num, den)


class RatFunc:
    """Immutable reduced fraction of two MPoly values."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = MPoly.const(1) if den is None else _coerce_poly(den)
        if num is None or den is None:
            raise TypeError("RatFunc needs polynomial-like arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MPoly.const(1)
        else:
            g = poly_gcd(num, den)
            if not g.is_const() or g.const_value() != 1:
                num = divexact(num, g)
                den = divexact(den, g)
            lc = den.leading_coeff()
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _raw(num: MPoly, den: MPoly) -> "RatFunc":
        r = RatFunc.__new__(RatFunc)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc._raw(MPoly.zero(), MPoly.const(1))

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc._raw(MPoly.const(c), MPoly.const(1))

    @staticmethod
    def var(v: Var) -> "RatFunc":
        return RatFunc._raw(MPoly.var(v), MPoly.const(1))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.const_value() / self.den.const_value()

    def is_polynomial(self) -> bool:
        return self.den.is_const()

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError("denominator is not constant")
        return self.num * (1 / self.den.const_value())

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def variables(self) -> set[Var]:
        return self.num.variables() | self.den.variables()

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RatFunc | None":
        if isinstance(x, RatFunc):
            return x
        p = _coerce_poly(x)
        return None if p is None else RatFunc(p)

    def __add__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_const():
            # coprime denominators: the sum is already in lowest terms
            return _monic_raw(self.num * other.den + other.num * self.den,
                              self.den * other.den)
        da = divexact(self.den, g)
        db = divexact(other.den, g)
        t = self.num * db + other.num * da
        if t.is_zero():
            return RatFunc.zero()
        # only factors of g can cancel against the combined denominator
        h = poly_gcd(t, g)
        if h.is_const():
            return _monic_raw(t, self.den * db)
        return _monic_raw(divexact(t, h), da * divexact(other.den, h))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        # cross-cancel first; products of reduced pairs stay reduced
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = divexact(self.num, g1) * divexact(other.num, g2)
        den = divexact(self.den, g2) * divexact(other.den, g1)
        return _monic_raw(num, den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if self.is_zero():
            return RatFunc.zero()
        return self * _monic_raw(other.den, other.num)

    def __rtruediv__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc._raw(self.num**n, self.den**n) if n else RatFunc.const(1)

    # -- calculus and substitution ----------------------------------------

    def derivative(self, v: Var) -> "RatFunc":
        dn = self.num.derivative(v)
        dd = self.den.derivative(v)
        if dd.is_zero():
            return RatFunc(dn, self.den)
        return quotient_derivative(self.num, self.den, dn, dd)

    def subs(self, mapping: Mapping[Var, "RatFunc"]) -> "RatFunc":
        """Exact substitution; raises PoleError on a vanishing denominator."""
        num = poly_subs(self.num, mapping)
        den = poly_subs(self.den, mapping)
        if den.is_zero():
            raise PoleError("substitution produced a pole")
        return num / den

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = RatFunc._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def quotient_derivative(n: MPoly, d: MPoly, dn: MPoly, dd: MPoly) -> RatFunc:
    """Reduced (dn*d - n*dd) / d^2 for a reduced n/d under any derivation.

    With w = gcd(d, dd) the value equals (dn*(d/w) - n*(dd/w)) / (d*(d/w)),
    and every factor still shared by that pair divides w, so one more
    small gcd reduces it completely; the quadratic-size gcd of the naive
    quotient rule never happens.
    """
    w = poly_gcd(d, dd)
    if w.is_const():
        num = dn * d - n * dd
        if num.is_zero():
            return RatFunc.zero()
        return _monic_raw(num, d * d)
    dh = divexact(d, w)
    num = dn * dh - n * divexact(dd, w)
    if num.is_zero():
        return RatFunc.zero()
    den = d * dh
    h = poly_gcd(num, w)
    if not h.is_const():
        num = divexact(num, h)
        den = divexact(den, h)
    return _monic_raw(num, den)


def poly_subs(p: MPoly, mapping: Mapping[Var, RatFunc]) -> RatFunc:
    """Evaluate a polynomial at rational-function values for some variables."""
    result = RatFunc(p)
    for v, val in mapping.items():
        if v not in result.variables():
            continue
        val = RatFunc._coerce(val)
        num = _eval_var(result.num, v, val)
        den = _eval_var(result.den, v, val)
        if den.is_zero():
            raise PoleError("substitution produced a pole")
        result = num / den
    return result


def subs_is_zero(p: MPoly, mapping: Mapping[Var, RatFunc]) -> bool:
    """Exact test that p vanishes identically under the substitution.

    The image is carried as an unreduced numerator/denominator pair, so no
    gcd is ever taken; the unreduced numerator is zero exactly when the
    reduced image is, which makes this far cheaper than reducing the image
    of a large identity through poly_subs.
    """
    num, den = p, MPoly.const(1)
    for v, val in mapping.items():
        if v in den.variables():
            # a substituted value brought this variable back; reduce so the
            # pole check below sees the true denominator
            reduced = RatFunc(num, den)
            num, den = reduced.num, reduced.den
        in_den = v in den.variables()
        if v not in num.variables() and not in_den:
            continue
        val = RatFunc._coerce(val)
        n, d = _eval_pair(num, v, val)
        if in_den:
            dn, dd = _eval_pair(den, v, val)
            if dn.is_zero():
                raise PoleError("substitution produced a pole")
            num, den = n * dd, dn * d
        else:
            num, den = n, den * d
    return num.is_zero()


def _eval_var(p: MPoly, v: Var, val: RatFunc) -> RatFunc:
    coeffs = p.coeffs_in(v)
    acc = RatFunc.zero()
    for c in reversed(coeffs):
        acc = acc * val + RatFunc(c)
    return acc


def _eval_pair(p: MPoly, v: Var, val: RatFunc) -> tuple[MPoly, MPoly]:
    """Value of p with v set to val, as numerator over a power of val.den."""
    coeffs = p.coeffs_in(v)
    acc = MPoly.zero()
    dpow = MPoly.const(1)
    for i in range(len(coeffs) - 1, -1, -1):
        acc = acc * val.num + coeffs[i] * dpow
        if i:
            dpow = dpow * val.den
    return acc, dpow
