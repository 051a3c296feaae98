"""Sparse multivariate polynomials over Q with exact Fraction coefficients.

A monomial is a tuple of (Var, exponent) pairs sorted ascending by the
global variable order; a polynomial is a map from monomials to nonzero
Fractions.  All operations are exact and produce canonical representations,
so equal polynomials compare equal and print identically.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Mapping

from .variables import Var

Mono = tuple[tuple[Var, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

EMPTY_MONO: Mono = ()


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    """Merge two sorted exponent tuples, adding exponents."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1.key < v2.key:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_divide(m1: Mono, m2: Mono) -> Mono | None:
    """m1 / m2, or None when some exponent would go negative."""
    rem = dict(m1)
    for v, e in m2:
        have = rem.get(v, 0) - e
        if have < 0:
            return None
        if have:
            rem[v] = have
        else:
            del rem[v]
    return tuple(sorted(rem.items(), key=lambda it: it[0].key))


def mono_cmp(m1: Mono, m2: Mono) -> int:
    """Graded lexicographic comparison; returns -1, 0 or 1."""
    d1, d2 = mono_degree(m1), mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    i, j = len(m1) - 1, len(m2) - 1
    while i >= 0 and j >= 0:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 != v2:
            return 1 if v1.key > v2.key else -1
        if e1 != e2:
            return 1 if e1 > e2 else -1
        i -= 1
        j -= 1
    if i >= 0:
        return 1
    if j >= 0:
        return -1
    return 0


class MPoly:
    """Immutable sparse polynomial.  Do not mutate ``terms``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Fraction] | None = None):
        self.terms: dict[Mono, Fraction] = dict(terms) if terms else {}
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return MPoly()

    @staticmethod
    def const(c) -> "MPoly":
        c = Fraction(c)
        return MPoly({EMPTY_MONO: c}) if c else MPoly()

    @staticmethod
    def var(v: Var, exp: int = 1) -> "MPoly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return MPoly.const(1)
        return MPoly({((v, exp),): _ONE})

    @staticmethod
    def _raw(terms: dict[Mono, Fraction]) -> "MPoly":
        p = MPoly.__new__(MPoly)
        p.terms = terms
        p._hash = None
        return p

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and EMPTY_MONO in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get(EMPTY_MONO, _ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ----------------------------------------------------

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree(self, v: Var) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        best = 0
        for m in self.terms:
            for w, e in m:
                if w == v and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def as_univariate(self, v: Var) -> dict[int, "MPoly"]:
        """Coefficients keyed by the exponent of ``v``."""
        out: dict[int, dict[Mono, Fraction]] = {}
        for m, c in self.terms.items():
            e = 0
            rest = m
            for idx, (w, k) in enumerate(m):
                if w == v:
                    e = k
                    rest = m[:idx] + m[idx + 1:]
                    break
            out.setdefault(e, {})[rest] = c
        return {e: MPoly._raw(t) for e, t in out.items()}

    def coeff_in(self, v: Var, exp: int) -> "MPoly":
        return self.as_univariate(v).get(exp, MPoly.zero())

    def coeffs_in(self, v: Var) -> list["MPoly"]:
        """Dense coefficient list [c0, c1, ..., c_deg] with respect to ``v``."""
        uni = self.as_univariate(v)
        d = max(uni) if uni else 0
        return [uni.get(i, MPoly.zero()) for i in range(d + 1)]

    def leading(self) -> tuple[Mono, Fraction]:
        """Leading term under the global graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        best = None
        for m in self.terms:
            if best is None or mono_cmp(m, best) > 0:
                best = m
        return best, self.terms[best]

    def leading_coeff(self) -> Fraction:
        return self.leading()[1]

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in descending global order (leading first)."""
        import functools

        key = functools.cmp_to_key(mono_cmp)
        return sorted(self.terms.items(), key=lambda it: key(it[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly()
            return MPoly._raw({m: k * c for m, k in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return MPoly()
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self * (1 / c)
        return NotImplemented

    # -- calculus and substitution ------------------------------------

    def derivative(self, v: Var) -> "MPoly":
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            for idx, (w, e) in enumerate(m):
                if w == v:
                    if e == 1:
                        key = m[:idx] + m[idx + 1:]
                    else:
                        key = m[:idx] + ((w, e - 1),) + m[idx + 1:]
                    s = out.get(key, _ZERO) + c * e
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
                    break
        return MPoly._raw(out)

    def subs_poly(self, mapping: Mapping[Var, "MPoly"]) -> "MPoly":
        """Substitute polynomial values for variables (Horner per variable)."""
        result = self
        for v, val in mapping.items():
            if v not in result.variables():
                continue
            coeffs = result.coeffs_in(v)
            acc = MPoly.zero()
            for c in reversed(coeffs):
                acc = acc * val + c
            result = acc
        return result

    # -- normalization helpers ----------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integral primitive; 0 for zero."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = _igcd(num, abs(c.numerator))
            den = den * c.denominator // _igcd(den, c.denominator)
        return Fraction(num, den)

    def monic(self) -> "MPoly":
        """Scale so the leading coefficient is 1."""
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return self * (1 / lc)

    def primitive_signed(self) -> tuple[Fraction, "MPoly"]:
        """(c, p) with self = c*p, p integral primitive, positive leading coeff."""
        if not self.terms:
            return _ZERO, self
        c = self.rational_content()
        if self.leading_coeff() < 0:
            c = -c
        return c, self * (1 / c)

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        return poly_text(self)


def poly_text(p: MPoly) -> str:
    """Canonical text form: descending terms, explicit '*', '^' powers."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for m, c in p.sorted_terms():
        neg = c < 0
        c = abs(c)
        factors = []
        if c != 1 or not m:
            factors.append(str(c))
        for v, e in reversed(m):
            factors.append(v.display() if e == 1 else f"{v.display()}^{e}")
        body = "*".join(factors)
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def poly_sum(items: Iterable[MPoly]) -> MPoly:
    acc = MPoly.zero()
    for it in items:
        acc = acc + it
    return acc
