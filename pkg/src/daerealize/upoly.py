"""Dense univariate polynomials over the exact rational function field.

The integration routines work in K[u] where K collects every other
variable.  Coefficients are RatFunc values; the main variable is implicit
in the representation and only supplied when converting back.

Includes Yun's squarefree decomposition, the extended Euclidean algorithm,
and Hermite reduction, which together decide rational integrability.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DaerealizeError
from .mpoly import MPoly
from .ratfunc import RatFunc
from .variables import Var

_ZERO = RatFunc.zero()
_ONE = RatFunc.const(Fraction(1))


class UPoly:
    """Coefficients ascending, trimmed; () is the zero polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UPoly":
        return UPoly(())

    @staticmethod
    def const(r: RatFunc) -> "UPoly":
        return UPoly((r,))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> RatFunc:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UPoly") -> "UPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UPoly([(a[i] if i < len(a) else _ZERO)
                      + (b[i] if i < len(b) else _ZERO) for i in range(n)])

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: "UPoly") -> "UPoly":
        if not self.coeffs or not other.coeffs:
            return UPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def scale(self, r: RatFunc) -> "UPoly":
        return UPoly([c * r for c in self.coeffs])

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        inv = _ONE / self.lc()
        return self.scale(inv)

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("univariate division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv = _ONE / other.lc()
        q = [_ZERO] * max(len(rem) - db, 1)
        while len(rem) - 1 >= db and rem:
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem or len(rem) - 1 < db:
                break
            c = rem[-1] * inv
            d = len(rem) - 1
            q[d - db] = c
            for i in range(db + 1):
                rem[d - db + i] = rem[d - db + i] - c * other.coeffs[i]
            rem.pop()
        return UPoly(q), UPoly(rem)

    def derivative(self) -> "UPoly":
        return UPoly([c * RatFunc.const(Fraction(i))
                      for i, c in enumerate(self.coeffs)][1:])


def gcd_upoly(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def ext_gcd_upoly(a: UPoly, b: UPoly):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UPoly.const(_ONE), UPoly.zero()
    t0, t1 = UPoly.zero(), UPoly.const(_ONE)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = _ONE / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def yun_squarefree(p: UPoly) -> list[tuple[UPoly, int]]:
    """[(q_i, i)] with p = lc * prod q_i^i, q_i monic squarefree coprime."""
    if p.degree() < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    g = gcd_upoly(p, dp)
    if g.degree() == 0:
        return [(p, 1)]
    w = p.divmod(g)[0]
    z = dp.divmod(g)[0]
    out = []
    i = 1
    while w.degree() > 0:
        y = z - w.derivative()
        h = gcd_upoly(w, y)
        if h.degree() > 0:
            out.append((h, i))
        w = w.divmod(h)[0]
        z = y.divmod(h)[0]
        i += 1
    return out


def upoly_of(p: MPoly, main: Var) -> UPoly:
    uni = p.as_univariate(main)
    top = max(uni) if uni else -1
    return UPoly([RatFunc(uni.get(i, MPoly.zero())) for i in range(top + 1)])


def rat_as_upair(r: RatFunc, main: Var) -> tuple[UPoly, UPoly]:
    return upoly_of(r.num, main), upoly_of(r.den, main)


def upoly_to_rat(p: UPoly, main: Var) -> RatFunc:
    out = RatFunc.zero()
    power = RatFunc.const(Fraction(1))
    m = RatFunc.var(main)
    for c in p.coeffs:
        out = out + c * power
        power = power * m
    return out


def integrate_poly(p: UPoly) -> UPoly:
    return UPoly([_ZERO] + [c / RatFunc.const(Fraction(i + 1))
                            for i, c in enumerate(p.coeffs)])


def hermite_reduce(a: UPoly, d: UPoly, main: Var):
    """Write a/d = (g)' + a*/d* with d* squarefree.

    Requires deg a < deg d and d monic.  Returns (g, a*, d*) with g a
    RatFunc in ``main`` and the star pair reduced.
    """
    if a.degree() >= d.degree():
        raise DaerealizeError("hermite reduction needs a proper fraction")
    g = RatFunc.zero()
    while True:
        common = gcd_upoly(a, d)
        if common.degree() > 0:
            a = a.divmod(common)[0]
            d = d.divmod(common)[0]
        d = d.monic()
        layers = yun_squarefree(d)
        m = max((i for _q, i in layers), default=0)
        if m <= 1:
            return g, a, d
        v = next(q for q, i in layers if i == m)
        u_poly = UPoly.const(_ONE)
        for q, i in layers:
            if q is not v:
                u_poly = u_poly * _upow(q, i)
        # d = u_poly * v^m with gcd(u_poly * v', v) = 1
        _g, s, _t = ext_gcd_upoly(u_poly * v.derivative(), v)
        if _g.degree() != 0:
            raise DaerealizeError("hermite step lost coprimality")
        b = (s * a).divmod(v)[1]
        c = (a - b * (u_poly * v.derivative())).divmod(v)[0]
        k = Fraction(1, 1 - m)
        vpow = _upow(v, m - 1)
        g = g + upoly_to_rat(b.scale(RatFunc.const(k)), main) / upoly_to_rat(vpow, main)
        a = c - b.derivative().scale(RatFunc.const(k)) * u_poly
        d = u_poly * vpow


def _upow(p: UPoly, e: int) -> UPoly:
    out = UPoly.const(_ONE)
    for _ in range(e):
        out = out * p
    return out


def rational_antiderivative(r: RatFunc, main: Var):
    """(antiderivative, True) when one exists in the rational functions,
    else (None, False).  The decision is exact: a nonzero logarithmic
    remainder certifies nonexistence."""
    num, den = rat_as_upair(r, main)
    if den.degree() == 0:
        poly = num.scale(_ONE / den.lc())
        return upoly_to_rat(integrate_poly(poly), main), True
    q, rem = num.divmod(den)
    head = upoly_to_rat(integrate_poly(q), main)
    if rem.is_zero():
        return head, True
    common = gcd_upoly(rem, den)
    if common.degree() > 0:
        rem = rem.divmod(common)[0]
        den = den.divmod(common)[0]
    lead = den.lc()
    rem = rem.scale(_ONE / lead)
    den = den.monic()
    g, a_star, _d_star = hermite_reduce(rem, den, main)
    if not a_star.is_zero():
        return None, False
    return head + g, True
