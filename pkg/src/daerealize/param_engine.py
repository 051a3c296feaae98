"""Chart construction on the hypersurface cut out by a candidate equation.

Given P(z_0, ..., z_h, u) with z_i playing the role of the i-th output
derivative, realizations correspond to rational charts of the hypersurface
P = 0 whose top coordinate has the input-degree profile of P itself.  The
chart is found by an ansatz: write

    z_h = (a_0 + a_1 u + ... + a_p u^p) / (1 + b_1 u + ... + b_q u^q)

with p, q read off the extreme coefficients of P in z_h, substitute, and
force every u-coefficient of the numerator to vanish.  The resulting
polynomial system in the a_i, b_j over k(z_0, ..., z_{h-1}) is triangular
in practice; each solution component becomes a candidate chart, with plane
curve components parametrized when the chart is one-dimensional.

A shift u -> u + c keeps the denominator normalization harmless when the
leading coefficient vanishes at u = 0; it is undone in the returned charts.

Branches the machinery cannot decide are collected as taint strings so the
caller can distinguish a certified dead end from an honest give-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import parametrize_plane_curve
from .dynsys import Parametrization
from .errors import DaerealizeError, PoleError, UnsupportedError
from .factor import factor
from .mpoly import MPoly, poly_sum
from .ratfunc import RatFunc, poly_subs, subs_is_zero
from .trisolve import solve_triangular
from .variables import Kind, Var, ansatz, input_jet, state

INPUT_VAR = input_jet()


@dataclass(frozen=True)
class ChartSearch:
    """Candidate charts plus reasons for any branches left undecided.

    No charts and no taints means the search space was exhausted: the
    equation has no realization of the requested shape.
    """

    charts: tuple[Parametrization, ...]
    taints: tuple[str, ...]

    @property
    def certified_empty(self) -> bool:
        return not self.charts and not self.taints


def _shift_input(p: MPoly, c: Fraction) -> MPoly:
    if not c:
        return p
    target = RatFunc.var(INPUT_VAR) + RatFunc.const(c)
    out = poly_subs(p, {INPUT_VAR: target})
    return out.as_poly()


def _subs_rat(r: RatFunc, mapping) -> RatFunc:
    num = poly_subs(r.num, mapping)
    den = poly_subs(r.den, mapping)
    if den.is_zero():
        raise PoleError("denominator vanished during chart assembly")
    return num / den


def hypersurface_charts(P: MPoly, zvars, mode: str = "rational",
                        point_height: int = 10) -> ChartSearch:
    """Search for realization charts of P(z_0..z_h, u) = 0.

    mode "rational" uses the full input-degree ansatz; "input-affine"
    restricts the top coordinate to a_0 + a_1 u.
    """
    zvars = tuple(zvars)
    h = len(zvars) - 1
    if h < 0:
        raise ValueError("need at least one chart variable")
    zh = zvars[h]
    d = P.degree(zh)
    if d <= 0:
        raise ValueError("equation does not involve the top chart variable")
    allowed = set(zvars) | {INPUT_VAR}
    for v in P.variables():
        if v.kind is Kind.PARAM or v in allowed:
            continue
        if v.kind is Kind.INPUT:
            raise ValueError("input derivatives are not allowed here")
        raise ValueError(f"unexpected variable {v.display()}")

    coeffs = P.coeffs_in(zh)
    shift = Fraction(0)
    while poly_subs(coeffs[d], {INPUT_VAR: RatFunc.const(shift)}).is_zero():
        shift += 1
    P_shifted = _shift_input(P, shift)
    coeffs = P_shifted.coeffs_in(zh)
    d0 = max(0, coeffs[0].degree(INPUT_VAR))
    d1 = max(0, coeffs[d].degree(INPUT_VAR))
    if mode == "input-affine":
        num_deg, den_deg = 1, 0
    elif mode == "rational":
        num_deg, den_deg = d0, d1
    else:
        raise ValueError(f"unknown chart mode {mode!r}")

    avars = [ansatz(f"a{i}") for i in range(num_deg + 1)]
    bvars = [ansatz(f"b{i}") for i in range(1, den_deg + 1)]
    for v in (*avars, *bvars):
        if v in P.variables():
            raise DaerealizeError(f"ansatz variable {v.display()} collides")
    u_poly = MPoly.var(INPUT_VAR)
    numer = poly_sum(MPoly.var(a) * u_poly**i for i, a in enumerate(avars))
    denom = MPoly.const(1) + poly_sum(
        MPoly.var(b) * u_poly**i for i, b in enumerate(bvars, start=1))
    top = RatFunc(numer, denom)
    cleared = poly_subs(P_shifted, {zh: top}).num
    eqs = [f for f in cleared.coeffs_in(INPUT_VAR) if not f.is_zero()]

    try:
        sol = solve_triangular(eqs, avars + bvars)
    except UnsupportedError as exc:
        return ChartSearch((), (f"coefficient system: {exc.reason}",))
    if sol is None:
        return ChartSearch((), ())

    states = tuple(state(f"x{i + 1}") for i in range(h))
    to_states = {zvars[i]: RatFunc.var(states[i]) for i in range(h)}
    unshift = {INPUT_VAR: RatFunc.var(INPUT_VAR) - RatFunc.const(shift)}

    def assemble(extra, z_map, chart_states):
        mapping = dict(sol.assignments)
        mapping.update(extra)
        gh = _subs_rat(top, mapping)
        gh = _subs_rat(gh, z_map)
        gh = _subs_rat(gh, unshift)
        lower = [_subs_rat(RatFunc.var(zvars[i]), z_map) for i in range(h)]
        chart = Parametrization(gammas=(*lower, gh), states=chart_states)
        if not subs_is_zero(P, {zvars[i]: chart.gammas[i] for i in range(h + 1)}):
            raise DaerealizeError("chart does not satisfy the equation")
        return chart

    charts: list[Parametrization] = []
    taints: list[str] = []
    if sol.separator is None:
        charts.append(assemble({}, to_states, states))
        return ChartSearch(tuple(charts), ())

    w, q = sol.separator, sol.residual
    try:
        branches = factor(q).irreducibles()
    except UnsupportedError as exc:
        return ChartSearch((), (f"residual factorization: {exc.reason}",))
    for r in branches:
        if r.degree(w) == 1:
            wval = RatFunc(-r.coeff_in(w, 0), r.coeff_in(w, 1))
            try:
                charts.append(assemble({w: wval}, to_states, states))
            except PoleError as exc:
                taints.append(f"rational component: {exc}")
        elif h == 1:
            try:
                cp = parametrize_plane_curve(r, zvars[0], w, states[0],
                                             height_bound=point_height)
            except UnsupportedError as exc:
                taints.append(f"curve component: {exc.reason}")
                continue
            chi_z, chi_w = cp.components
            try:
                charts.append(assemble({w: chi_w}, {zvars[0]: chi_z},
                                       (states[0],)))
            except PoleError as exc:
                taints.append(f"curve component: {exc}")
        else:
            taints.append(
                "solution component of positive dimension with several chart "
                "variables")
    return ChartSearch(tuple(charts), tuple(taints))
