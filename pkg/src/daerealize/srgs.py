"""One-parameter rational solution families of first-order equations.

Given h(w, y, u) = 0 linear in w, where w stands for dy/du, look for a
family y0(u, c), rational in u and a Moebius function of the free constant
c, with h(dy0/du, y0, u) = 0 identically.  Three shapes of the solved form
dy/du = R(y, u) are covered:

* R free of y: integrate; a nonzero logarithmic remainder certifies
  nonexistence;
* R linear in y: the integrating factor must be rational, which pins its
  log-derivative down to integer residues over a squarefree denominator;
* R quadratic in y (Riccati): search for a polynomial particular solution
  of bounded degree, then reduce to the linear case.

Returns None for certified nonexistence.  Shapes or searches beyond the
above raise UnsupportedError; a Riccati give-up is never reported as
nonexistence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DaerealizeError, UnsupportedError
from .factor import factor
from .mpoly import MPoly, poly_sum
from .ratfunc import RatFunc, poly_subs
from .upoly import (UPoly, ext_gcd_upoly, gcd_upoly, hermite_reduce,
                    rat_as_upair, rational_antiderivative, upoly_of,
                    upoly_to_rat)
from .variables import Kind, Var, ansatz, input_jet

INPUT_VAR = input_jet()


@dataclass(frozen=True)
class SolutionFamily:
    """y0(u, c): rational in u, Moebius in the family constant c."""

    expr: RatFunc
    constant: Var


def _rational_exp_integral(p: RatFunc) -> RatFunc | None:
    """H with H'/H = p, rational, or None when no such H exists.

    Exists exactly when p has zero polynomial part, zero Hermite part, and
    integer residues; then H is the product of the denominator's
    irreducible factors raised to those residues.
    """
    num, den = rat_as_upair(p, INPUT_VAR)
    if den.degree() == 0:
        num = num.scale(RatFunc.const(Fraction(1)) / den.lc())
        return RatFunc.const(Fraction(1)) if num.is_zero() else None
    qpart, rem = num.divmod(den)
    if not qpart.is_zero():
        return None
    if rem.is_zero():
        return RatFunc.const(Fraction(1))
    common = gcd_upoly(rem, den)
    if common.degree() > 0:
        rem = rem.divmod(common)[0]
        den = den.divmod(common)[0]
    lead = den.lc()
    rem = rem.scale(RatFunc.const(Fraction(1)) / lead)
    den = den.monic()
    g, a_star, d_star = hermite_reduce(rem, den, INPUT_VAR)
    if not g.is_zero():
        return None
    d_poly = upoly_to_rat(d_star, INPUT_VAR).num
    try:
        pieces = factor(d_poly)
    except UnsupportedError as exc:
        raise UnsupportedError(
            f"integrating factor needs a factored denominator: {exc.reason}")
    dprime = d_star.derivative()
    h_out = RatFunc.const(Fraction(1))
    for di, _mult in pieces.factors:
        if INPUT_VAR not in di.variables():
            continue
        di_up = upoly_of(di, INPUT_VAR)
        g1, s, _t = ext_gcd_upoly(dprime, di_up)
        if g1.degree() != 0:
            raise DaerealizeError("squarefree denominator shares a factor "
                                  "with its derivative")
        res = (a_star * s).divmod(di_up)[1]
        if res.degree() > 0:
            return None
        if res.is_zero():
            raise DaerealizeError("vanishing residue on a reduced fraction")
        value = res.coeffs[0]
        if not value.is_const():
            return None
        n = value.const_value()
        if n.denominator != 1:
            return None
        h_out = h_out * RatFunc(di) ** int(n)
    if h_out.derivative(INPUT_VAR) / h_out != p:
        raise DaerealizeError("integrating factor reconstruction failed")
    return h_out


def _linear_family(p: RatFunc, q: RatFunc, const_var: Var) -> RatFunc | None:
    """General solution of y' = p(u) y + q(u) as c*H + particular, or None."""
    h = _rational_exp_integral(p)
    if h is None:
        return None
    tail, ok = rational_antiderivative(q / h, INPUT_VAR)
    if not ok:
        return None
    return RatFunc.var(const_var) * h + h * tail


def _branch_solve(eqs: list[MPoly], unsolved: list[Var], partial: dict):
    """All rational solutions reachable by linear steps and univariate
    root branching; raises UnsupportedError when stuck."""
    eqs = [e.primitive_signed()[1] for e in eqs if not e.is_zero()]
    if any(e.is_const() for e in eqs):
        return []
    if not eqs:
        full = dict(partial)
        for w in unsolved:
            full[w] = RatFunc.zero()
        return [full]
    for w in unsolved:
        for e in eqs:
            if e.degree(w) != 1:
                continue
            if any(v in e.variables() for v in unsolved if v is not w):
                continue
            val = RatFunc(-e.coeff_in(w, 0), e.coeff_in(w, 1))
            nxt = [poly_subs(f, {w: val}).num for f in eqs if f is not e]
            sub = dict(partial)
            sub[w] = val
            return _branch_solve(nxt, [v for v in unsolved if v is not w], sub)
    for e in eqs:
        present = [w for w in unsolved if w in e.variables()]
        if len(present) != 1:
            continue
        w = present[0]
        roots = []
        for r in factor(e).irreducibles():
            if r.degree(w) == 1:
                roots.append(RatFunc(-r.coeff_in(w, 0), r.coeff_in(w, 1)))
        out = []
        for val in roots:
            nxt = [poly_subs(f, {w: val}).num for f in eqs if f is not e]
            sub = dict(partial)
            sub[w] = val
            out.extend(_branch_solve(nxt, [v for v in unsolved if v is not w],
                                     sub))
        return out
    raise UnsupportedError("particular solution search is stuck")


def _poly_particular(r2: RatFunc, r1: RatFunc, r0: RatFunc,
                     degree_bound: int) -> RatFunc:
    """A polynomial particular solution of y' = r2 y^2 + r1 y + r0.

    Bounded-degree ansatz; raises UnsupportedError when none is found, as
    the search does not exclude higher-degree or rational particulars.
    """
    wvars = [ansatz(f"w{i}") for i in range(degree_bound + 1)]
    u_poly = MPoly.var(INPUT_VAR)
    w_ans = poly_sum(MPoly.var(w) * u_poly**i for i, w in enumerate(wvars))
    wr = RatFunc(w_ans)
    residue = wr.derivative(INPUT_VAR) - (r2 * wr * wr + r1 * wr + r0)
    eqs = [e for e in residue.num.coeffs_in(INPUT_VAR) if not e.is_zero()]
    sols = _branch_solve(eqs, list(wvars), {})
    if not sols:
        raise UnsupportedError(
            f"no polynomial particular solution up to degree {degree_bound}")
    pick = sols[0]
    y_p = RatFunc.zero()
    upow = RatFunc.const(Fraction(1))
    for w in wvars:
        y_p = y_p + pick[w] * upow
        upow = upow * RatFunc.var(INPUT_VAR)
    check = y_p.derivative(INPUT_VAR) - (r2 * y_p * y_p + r1 * y_p + r0)
    if not check.is_zero():
        raise DaerealizeError("particular solution failed verification")
    return y_p


def srgs_solve(h0: MPoly, deriv_var: Var, yvar: Var, const_var: Var,
               riccati_degree: int = 6) -> SolutionFamily | None:
    """Solve h0 = 0, linear in deriv_var standing for dy/du, for a rational
    one-parameter family y0(u, const_var).  None certifies nonexistence."""
    if h0.degree(deriv_var) != 1:
        raise UnsupportedError("equation is not linear in the derivative")
    for v in h0.variables():
        if v in (deriv_var, yvar, INPUT_VAR) or v.kind is Kind.PARAM:
            continue
        raise ValueError(f"unexpected variable {v.display()}")
    rhs = RatFunc(-h0.coeff_in(deriv_var, 0), h0.coeff_in(deriv_var, 1))
    c = RatFunc.var(const_var)
    if yvar not in rhs.variables():
        anti, ok = rational_antiderivative(rhs, INPUT_VAR)
        if not ok:
            return None
        return SolutionFamily(expr=anti + c, constant=const_var)
    if yvar in rhs.den.variables():
        raise UnsupportedError("derivative is not polynomial in the function")
    deg = rhs.num.degree(yvar)
    den = RatFunc(rhs.den)
    coeff = [RatFunc(rhs.num.coeff_in(yvar, i)) / den for i in range(deg + 1)]
    if deg == 1:
        expr = _linear_family(coeff[1], coeff[0], const_var)
        if expr is None:
            return None
        return SolutionFamily(expr=expr, constant=const_var)
    if deg == 2:
        y_p = _poly_particular(coeff[2], coeff[1], coeff[0], riccati_degree)
        pz = -(RatFunc.const(Fraction(2)) * coeff[2] * y_p + coeff[1])
        qz = -coeff[2]
        z0 = _linear_family(pz, qz, const_var)
        if z0 is None:
            return None
        expr = y_p + RatFunc.const(Fraction(1)) / z0
        return SolutionFamily(expr=expr, constant=const_var)
    raise UnsupportedError("derivative has degree above two in the function")
