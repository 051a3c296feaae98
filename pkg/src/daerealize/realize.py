"""Decision procedure for realizing a single DAE by a rational system.

The entry point realize() takes one polynomial differential equation in one
output y and one input u and either produces a verified state-space system,
certifies that none exists, or reports the branches it could not decide.

Scope by input shape:

* no input derivatives: chart search on the output hypersurface at any
  output order, for the plain rational and the input-affine system classes;
* first order in both y and u: the substitution y' = a u' + b splits the
  equation into a solvable-ODE part and a plane-curve part (rational
  class), or a bidegree ansatz reduces it to curve parametrizations
  (input-affine class);
* anything higher: undecided, only verification of a given candidate is
  offered.

A NO is reported only when every branch ends in a certificate; any branch
cut short by a factorization or parametrization gap downgrades the answer
to UNSUPPORTED with the reasons listed in diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import check_properness, parametrize_plane_curve
from .diffring import ord_u, ord_y
from .dynsys import (DynSystem, Parametrization, assemble_system,
                     solve_realization, verify_realization)
from .errors import PoleError, UnsupportedError
from .factor import factor
from .mpoly import MPoly
from .param_engine import hypersurface_charts
from .ratfunc import RatFunc, poly_subs
from .srgs import srgs_solve
from .trisolve import solve_triangular
from .variables import Kind, Var, ansatz, input_jet, output_jet, state

REALIZED = "REALIZED"
NO = "NO"
UNSUPPORTED = "UNSUPPORTED"

U0 = input_jet(0)
U1 = input_jet(1)
Y0 = output_jet(0)
Y1 = output_jet(1)


@dataclass(frozen=True)
class RealizeResult:
    status: str
    system: DynSystem | None = None
    diagnostics: tuple[str, ...] = ()


def _finish(taints: list[str]) -> RealizeResult:
    if taints:
        return RealizeResult(UNSUPPORTED, None, tuple(taints))
    return RealizeResult(NO, None, ())


def _params_of(*items) -> tuple[Var, ...]:
    found: set[Var] = set()
    for it in items:
        vs = it.variables() if not isinstance(it, (list, tuple)) \
            else {v for sub in it for v in sub.variables()}
        found |= {v for v in vs if v.kind is Kind.PARAM}
    return tuple(sorted(found))


def _factors_or_pieces(p: MPoly, taints: list[str], label: str) -> list[MPoly]:
    """Irreducible factors, or squarefree pieces plus a taint as fallback."""
    try:
        return factor(p).irreducibles()
    except UnsupportedError as exc:
        taints.append(f"{label}: {exc.reason}")
        payload = exc.payload or {}
        pieces = payload.get("squarefree")
        if pieces:
            return [f for f, _m in pieces]
        return [p.primitive_signed()[1]]


def _via_charts(P: MPoly, klass: str, taints: list[str],
                point_height: int) -> RealizeResult:
    """Order-zero input: parametrize the output hypersurface directly."""
    h = ord_y(P)
    zvars = [output_jet(i) for i in range(h + 1)]
    mode = "input-affine" if klass == "input-affine" else "rational"
    search = hypersurface_charts(P, zvars, mode=mode,
                                 point_height=point_height)
    taints.extend(search.taints)
    for chart in search.charts:
        rates = solve_realization(chart, klass)
        if rates is None:
            continue
        params = _params_of(P, list(chart.gammas), list(rates))
        sys = assemble_system(chart, rates, params=params)
        if verify_realization(sys, P):
            return RealizeResult(REALIZED, sys, tuple(taints))
    return _finish(taints)


def _algorithm2(P: MPoly, taints: list[str], point_height: int,
                riccati_degree: int) -> RealizeResult:
    """First-order rational realizations via y' = a u' + b."""
    avar = ansatz("a")
    bvar = ansatz("b")
    cvar = ansatz("c")
    sub = RatFunc.var(avar) * RatFunc.var(U1) + RatFunc.var(bvar)
    Q = poly_subs(P, {Y1: sub}).as_poly()
    dtop = Q.degree(U1)
    c0 = Q.coeff_in(U1, dtop)
    c1 = Q.coeff_in(U1, 0)

    for h0 in _factors_or_pieces(c0, taints, "leading coefficient"):
        if avar not in h0.variables():
            continue
        try:
            family = srgs_solve(h0, avar, Y0, cvar,
                                riccati_degree=riccati_degree)
        except UnsupportedError as exc:
            taints.append(f"solution family: {exc.reason}")
            continue
        if family is None:
            continue
        y0 = family.expr
        for h1 in _factors_or_pieces(c1, taints, "constant coefficient"):
            if bvar not in h1.variables():
                continue
            N = poly_subs(h1, {Y0: y0}).num
            search = hypersurface_charts(N, [cvar, bvar], mode="rational",
                                         point_height=point_height)
            taints.extend(search.taints)
            for chart in search.charts:
                gamma_c, gamma_b = chart.gammas
                x1 = chart.states[0]
                try:
                    g = y0.subs({cvar: gamma_c})
                except PoleError:
                    continue
                g_x = g.derivative(x1)
                if g_x.is_zero():
                    continue
                if not check_properness(chart.gammas, x1):
                    taints.append("chart parametrization is not proper")
                f = gamma_b / g_x
                params = _params_of(P, [g, f])
                sys = DynSystem(states=(x1,), rates=(f,), output=g,
                                params=params)
                if verify_realization(sys, P):
                    return RealizeResult(REALIZED, sys, tuple(taints))
    return _finish(taints)


def _affine_assemble(gamma0: RatFunc, gamma1: RatFunc, x1: Var,
                     P: MPoly) -> DynSystem | None:
    par = Parametrization(gammas=(gamma0, gamma1), states=(x1,))
    rates = solve_realization(par, "input-affine")
    if rates is None:
        return None
    params = _params_of(P, list(par.gammas), list(rates))
    sys = assemble_system(par, rates, params=params)
    return sys if verify_realization(sys, P) else None


def _algorithm3(P: MPoly, taints: list[str],
                point_height: int) -> RealizeResult:
    """First-order input-affine realizations via a bidegree ansatz."""
    a0v, a1v = ansatz("a0"), ansatz("a1")
    b0v, b1v, b2v = ansatz("b0"), ansatz("b1"), ansatz("b2")
    svar = ansatz("s")
    x1 = state("x1")
    u = RatFunc.var(U0)
    y_sub = RatFunc.var(a1v) * u + RatFunc.var(a0v)
    y1_sub = (RatFunc.var(b2v) * u * u + RatFunc.var(b1v) * u
              + RatFunc.var(b0v) + RatFunc.var(a1v) * RatFunc.var(U1))
    Pt = poly_subs(P, {Y0: y_sub, Y1: y1_sub}).as_poly()
    lead_du = Pt.coeff_in(U1, Pt.degree(U1))
    q = lead_du.coeff_in(U0, lead_du.degree(U0))

    for q0 in _factors_or_pieces(q, taints, "ansatz coefficient"):
        if a0v not in q0.variables() and a1v not in q0.variables():
            continue
        try:
            outer = parametrize_plane_curve(q0, a0v, a1v, svar,
                                            height_bound=point_height)
        except UnsupportedError as exc:
            taints.append(f"output coefficient curve: {exc.reason}")
            continue
        a0_s, a1_s = outer.components
        P0 = poly_subs(Pt, {a0v: a0_s, a1v: a1_s}).num
        eqs = []
        for cu1 in P0.coeffs_in(U1):
            eqs.extend(e for e in cu1.coeffs_in(U0) if not e.is_zero())
        try:
            sol = solve_triangular(eqs, [b0v, b1v, b2v])
        except UnsupportedError as exc:
            taints.append(f"rate coefficient system: {exc.reason}")
            continue
        if sol is None:
            continue

        charts: list[dict[Var, RatFunc]] = []
        if sol.separator is None:
            smap = {svar: RatFunc.var(x1)}
            chart = {v: r.subs(smap) for v, r in sol.assignments.items()}
            chart[svar] = RatFunc.var(x1)
            charts.append(chart)
        elif sol.separator in (b0v, b1v, b2v):
            w = sol.separator
            for piece in _factors_or_pieces(sol.residual, taints,
                                            "rate residual"):
                if w not in piece.variables():
                    continue
                try:
                    inner = parametrize_plane_curve(piece, svar, w, x1,
                                                    height_bound=point_height)
                except UnsupportedError as exc:
                    taints.append(f"rate coefficient curve: {exc.reason}")
                    continue
                s_x, w_x = inner.components
                smap = {svar: s_x}
                chart = {v: r.subs(smap) for v, r in sol.assignments.items()}
                chart[w] = w_x
                chart[svar] = s_x
                charts.append(chart)
        else:
            taints.append("rate coefficients need a combined separator")

        for chart in charts:
            try:
                a0_x = a0_s.subs({svar: chart[svar]})
                a1_x = a1_s.subs({svar: chart[svar]})
            except PoleError:
                continue
            gamma0 = a1_x * u + a0_x
            gamma1 = (chart[b2v] * u * u + chart[b1v] * u + chart[b0v]
                      + a1_x * RatFunc.var(U1))
            sys = _affine_assemble(gamma0, gamma1, x1, P)
            if sys is not None:
                return RealizeResult(REALIZED, sys, tuple(taints))
    return _finish(taints)


def _validate_dae(P: MPoly) -> None:
    if P.is_const():
        raise ValueError("equation is constant")
    out_names = {v.name for v in P.variables() if v.kind is Kind.OUTPUT}
    in_names = {v.name for v in P.variables() if v.kind is Kind.INPUT}
    if out_names - {"y"} or in_names - {"u"}:
        raise ValueError("equation must be written in the output y and "
                         "the input u")
    for v in P.variables():
        if v.kind not in (Kind.OUTPUT, Kind.INPUT, Kind.PARAM):
            raise ValueError(f"unexpected variable {v.display()}")
    if ord_y(P) < 0:
        raise ValueError("equation involves no output variable")


def realize(P: MPoly, mode: str = "auto", point_height: int = 10,
            riccati_degree: int = 6) -> RealizeResult:
    """Decide realizability of P = 0 and construct a system if possible.

    mode selects the system class and expected input order: "auto" picks
    from the equation shape (rational class), "order-zero" insists on no
    input derivatives, "first-order" on order one in y and u, and
    "input-affine" asks for rates and output affine in u.  Shape
    violations for an explicit mode raise ValueError.
    """
    _validate_dae(P)
    h = ord_y(P)
    r = ord_u(P)
    taints: list[str] = []

    work = P
    try:
        fz = factor(P)
        if len(fz.factors) > 1 or fz.factors[0][1] > 1:
            return RealizeResult(UNSUPPORTED, None, (
                "equation is reducible; realize each irreducible factor "
                "separately",))
        work = fz.factors[0][0]
    except UnsupportedError as exc:
        taints.append(f"input factorization: {exc.reason}")
        work = P.primitive_signed()[1]

    out_of_scope = ("realization beyond first order in the input is not "
                    "implemented; a candidate system can still be verified")
    if mode == "auto":
        if r <= 0:
            return _via_charts(work, "rational", taints, point_height)
        if r == 1 and h == 1:
            return _algorithm2(work, taints, point_height, riccati_degree)
        taints.append(out_of_scope)
        return RealizeResult(UNSUPPORTED, None, tuple(taints))
    if mode == "order-zero":
        if r > 0:
            raise ValueError("order-zero mode: equation must not involve "
                             "input derivatives")
        return _via_charts(work, "rational", taints, point_height)
    if mode == "first-order":
        if h != 1 or r != 1:
            raise ValueError("first-order mode: equation must have order "
                             "one in both output and input")
        return _algorithm2(work, taints, point_height, riccati_degree)
    if mode == "input-affine":
        if r <= 0:
            return _via_charts(work, "input-affine", taints, point_height)
        if r == 1 and h == 1:
            return _algorithm3(work, taints, point_height)
        taints.append(out_of_scope)
        return RealizeResult(UNSUPPORTED, None, tuple(taints))
    raise ValueError(f"unknown mode {mode!r}")
