"""Exact polynomial algorithms on MPoly: division, gcd, resultants.

Gcd and resultant both run on subresultant remainder sequences recursing
over the number of variables, so every intermediate division is exact;
degree-one resultants short-circuit to direct evaluation, and a Sylvester
matrix route with fraction-free Bareiss elimination is kept alongside as
an independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import ExactDivisionError
from .mpoly import Mono, MPoly, mono_cmp, mono_divide
from .variables import Var


def divexact(p: MPoly, d: MPoly) -> MPoly:
    """Exact quotient p/d; raises ExactDivisionError when not divisible."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    if d.is_const():
        return p * (1 / d.const_value())
    quo: dict = {}
    dm, dc = d.leading()
    rem = p
    while not rem.is_zero():
        rm, rc = rem.leading()
        qm = mono_divide(rm, dm)
        if qm is None:
            raise ExactDivisionError("inexact polynomial division")
        qc = rc / dc
        qterm = MPoly._raw({qm: qc})
        quo[qm] = qc
        rem = rem - qterm * d
    return MPoly._raw(quo)


def prem(a: MPoly, b: MPoly, v: Var) -> MPoly:
    """Pseudo-remainder of a by b as univariate polynomials in ``v``.

    Satisfies lc_v(b)^(deg a - deg b + 1) * a = q*b + prem(a, b, v).
    """
    da, db = a.degree(v), b.degree(v)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    lb = b.coeff_in(v, db)
    r = a
    e = da - db + 1
    while not r.is_zero():
        dr = r.degree(v)
        if dr < db:
            break
        lr = r.coeff_in(v, dr)
        r = lb * r - lr * b * MPoly.var(v, dr - db) if dr > db else lb * r - lr * b
        e -= 1
    if e > 0:
        r = r * lb**e
    return r


def content_in(p: MPoly, v: Var) -> MPoly:
    """Gcd of the coefficients of p with respect to ``v``."""
    uni = p.as_univariate(v)
    acc = MPoly.zero()
    # smallest coefficients first so the accumulator collapses to a
    # constant as early as possible
    for c in sorted(uni.values(), key=lambda q: len(q.terms)):
        acc = poly_gcd(acc, c)
        if acc.is_const() and not acc.is_zero():
            break
    return acc


def _strip_monomial(p: MPoly) -> tuple[Mono, MPoly]:
    """Factor p as monomial * rest with no variable dividing rest."""
    mins: dict | None = None
    for mono in p.terms:
        if mins is None:
            mins = dict(mono)
        elif mins:
            cur = dict(mono)
            for var in list(mins):
                e = cur.get(var, 0)
                if e <= 0:
                    del mins[var]
                elif e < mins[var]:
                    mins[var] = e
        else:
            break
    if not mins:
        return (), p
    m = tuple(sorted(mins.items()))
    return m, MPoly._raw({mono_divide(mono, m): c
                          for mono, c in p.terms.items()})


def _uni_image(p: MPoly, v: Var, point: dict) -> list[Fraction]:
    """Coefficient list of p in v after evaluating every other variable."""
    coeffs = [Fraction(0)] * (p.degree(v) + 1)
    for mono, c in p.terms.items():
        d = 0
        val = c
        for var, e in mono:
            if var == v:
                d = e
            else:
                val = val * point[var] ** e
        coeffs[d] += val
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _uni_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    while len(f) >= len(g):
        q = f[-1] / g[-1]
        off = len(f) - len(g)
        for i in range(len(g) - 1):
            f[off + i] -= q * g[i]
        f.pop()
        while f and not f[-1]:
            f.pop()
    return f


_EVAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def _coprime_by_specialization(a: MPoly, b: MPoly, v: Var) -> bool:
    """Certify that v-primitive a and b are coprime, or give up.

    Specializing the other variables at integers can only raise the gcd
    degree in v while a leading coefficient survives, so a constant image
    gcd is a proof of coprimality.  False means undecided, never unequal.
    """
    others = sorted((a.variables() | b.variables()) - {v})
    da, db = a.degree(v), b.degree(v)
    for shift in (0, 3):
        point = {var: _EVAL_PRIMES[(i + shift) % len(_EVAL_PRIMES)]
                 for i, var in enumerate(others)}
        fa, fb = _uni_image(a, v, point), _uni_image(b, v, point)
        if len(fa) - 1 != da and len(fb) - 1 != db:
            continue
        while fb:
            fa, fb = fb, _uni_rem(fa, fb)
        if len(fa) == 1:
            return True
    return False


def primitive_in(p: MPoly, v: Var) -> MPoly:
    c = content_in(p, v)
    if c.is_zero():
        return p
    return divexact(p, c)


def poly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """A gcd normalized to leading coefficient 1 under the global order."""
    g = _gcd(p, q)
    return g.monic()


def _gcd(p: MPoly, q: MPoly) -> MPoly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_const() or q.is_const():
        return MPoly.const(1)
    mp, p = _strip_monomial(p)
    mq, q = _strip_monomial(q)
    core = _gcd_stripped(p, q)
    shared = dict(mp)
    common = {var: min(e, shared[var]) for var, e in mq if var in shared}
    if common:
        m = tuple(sorted(common.items()))
        core = core * MPoly._raw({m: Fraction(1)})
    return core


def _gcd_stripped(p: MPoly, q: MPoly) -> MPoly:
    if p.is_const() or q.is_const():
        return MPoly.const(1)
    vp, vq = p.variables(), q.variables()
    v = max(vp | vq)
    in_p, in_q = v in vp, v in vq
    if in_p and not in_q:
        return _gcd(content_in(p, v), q)
    if in_q and not in_p:
        return _gcd(p, content_in(q, v))
    cp, cq = content_in(p, v), content_in(q, v)
    a, b = divexact(p, cp), divexact(q, cq)
    c = _gcd(cp, cq)
    if _coprime_by_specialization(a, b, v):
        return c
    if a.degree(v) < b.degree(v):
        a, b = b, a
    # subresultant remainder sequence: dividing by g*h^delta keeps the
    # coefficients small without recomputing contents at every step
    g = h = MPoly.const(1)
    while True:
        delta = a.degree(v) - b.degree(v)
        r = prem(a, b, v)
        if r.is_zero():
            return c * primitive_in(b, v)
        if r.degree(v) <= 0:
            return c
        a, b = b, divexact(r, g * h**delta)
        g = a.coeff_in(v, a.degree(v))
        if delta == 1:
            h = g
        elif delta > 1:
            h = divexact(g**delta, h**(delta - 1))


def poly_lcm(p: MPoly, q: MPoly) -> MPoly:
    if p.is_zero() or q.is_zero():
        return MPoly.zero()
    return divexact(p * q, poly_gcd(p, q)).monic()


def squarefree_decomposition(p: MPoly) -> tuple[Fraction, list[tuple[MPoly, int]]]:
    """Write p = c * prod f_i^(m_i) with the f_i squarefree, monic, coprime.

    Factors are returned as (f_i, m_i) pairs sorted deterministically.
    """
    if p.is_zero():
        return Fraction(0), []
    if p.is_const():
        return p.const_value(), []
    parts = _sqfree(p)
    parts.sort(key=lambda fm: (fm[1], sorted(v.key for v in fm[0].variables()), str(fm[0])))
    prod = MPoly.const(1)
    for f, m in parts:
        prod = prod * f**m
    c = divexact(p, prod)
    return c.const_value(), parts


def _sqfree(p: MPoly) -> list[tuple[MPoly, int]]:
    if p.is_const():
        return []
    v = max(p.variables())
    cont = content_in(p, v)
    pp = divexact(p, cont)
    out = [] if cont.is_const() else _sqfree(cont)
    # Yun's algorithm on the v-primitive part; all its factors involve v
    fp = pp.derivative(v)
    g = poly_gcd(pp, fp)
    if g.is_const():
        out.append((pp.monic(), 1))
        return out
    c = divexact(pp, g)
    d = divexact(fp, g) - c.derivative(v)
    i = 1
    while not c.is_const():
        h = poly_gcd(c, d)
        if not h.is_const():
            out.append((h.monic(), i))
        c = divexact(c, h)
        d = divexact(d, h) - c.derivative(v)
        i += 1
    return out


def poly_sqrt(p: MPoly) -> MPoly | None:
    """Exact square root with positive leading coefficient, or None."""
    if p.is_zero():
        return p
    lm, lc = p.leading()
    if lc < 0:
        return None
    if any(e % 2 for _, e in lm):
        return None
    n, d = lc.numerator, lc.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    s0 = MPoly._raw({tuple((v, e // 2) for v, e in lm): Fraction(rn, rd)})
    s = s0
    s0m, s0c = s0.leading()
    rem = p - s * s
    guard = 10000
    while not rem.is_zero():
        guard -= 1
        if guard < 0:
            return None
        rm, rc = rem.leading()
        tm = mono_divide(rm, s0m)
        if tm is None:
            return None
        t = MPoly._raw({tm: rc / (2 * s0c)})
        s = s + t
        rem = p - s * s
    return s


def bareiss_det(rows: list[list[MPoly]]) -> MPoly:
    """Determinant of a square MPoly matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return MPoly.const(1)
    a = [row[:] for row in rows]
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if piv is None:
            return MPoly.zero()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = divexact(num, prev)
            a[i][k] = MPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(p: MPoly, q: MPoly, v: Var) -> list[list[MPoly]]:
    m, n = p.degree(v), q.degree(v)
    pc = p.coeffs_in(v)
    qc = q.coeffs_in(v)
    size = m + n
    rows = []
    for i in range(n):
        row = [MPoly.zero()] * size
        for k in range(m + 1):
            row[i + k] = pc[m - k]
        rows.append(row)
    for i in range(m):
        row = [MPoly.zero()] * size
        for k in range(n + 1):
            row[i + k] = qc[n - k]
        rows.append(row)
    return rows


def _linear_resultant(q: MPoly, a: MPoly, b: MPoly, n: int, v: Var) -> MPoly:
    """Res_v(a*v + b, q) = a^n * q(-b/a), cleared, by Horner in -b."""
    coeffs = q.coeffs_in(v)
    apow = [MPoly.const(1)]
    for _ in range(n):
        apow.append(apow[-1] * a)
    negb = -b
    r = coeffs[n]
    for i in range(n - 1, -1, -1):
        r = r * negb + coeffs[i] * apow[n - i]
    return r


def _subresultant(p: MPoly, q: MPoly, v: Var) -> MPoly:
    """Res_v(p, q) by the subresultant remainder sequence.

    Avoids the Sylvester determinant; intermediate swell is controlled by
    the standard g, h division factors, which divide exactly.
    """
    sign = 1
    if p.degree(v) < q.degree(v):
        if (p.degree(v) * q.degree(v)) % 2:
            sign = -1
        p, q = q, p
    cp, cq = content_in(p, v), content_in(q, v)
    a_part, b_part = divexact(p, cp), divexact(q, cq)
    scale = cp ** q.degree(v) * cq ** p.degree(v)
    g = h = MPoly.const(1)
    while True:
        da, db = a_part.degree(v), b_part.degree(v)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = prem(a_part, b_part, v)
        if r.is_zero():
            return MPoly.zero()
        a_part, b_part = b_part, divexact(r, g * h ** delta)
        g = a_part.coeff_in(v, a_part.degree(v))
        if delta == 1:
            h = g
        elif delta > 1:
            h = divexact(g ** delta, h ** (delta - 1))
        if b_part.degree(v) <= 0:
            break
    da = a_part.degree(v)
    out = b_part if da == 1 else divexact(b_part ** da, h ** (da - 1))
    out = out * scale
    return -out if sign < 0 else out


def resultant(p: MPoly, q: MPoly, v: Var) -> MPoly:
    """Res_v(p, q), exact over any coefficients.

    Degree-one inputs reduce to an evaluation; everything else goes through
    the subresultant sequence.
    """
    m, n = p.degree(v), q.degree(v)
    if m < 0 or n < 0:
        return MPoly.zero()
    if m == 0 and n == 0:
        return MPoly.const(1)
    if m == 0:
        return p**n
    if n == 0:
        return q**m
    if m == 1:
        return _linear_resultant(q, p.coeff_in(v, 1), p.coeff_in(v, 0), n, v)
    if n == 1:
        r = _linear_resultant(p, q.coeff_in(v, 1), q.coeff_in(v, 0), m, v)
        return -r if m % 2 else r
    return _subresultant(p, q, v)
