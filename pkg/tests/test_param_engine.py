"""Hypersurface chart search used by the order-zero realization path."""

from fractions import Fraction

import pytest

from daerealize import parse_dae
from daerealize.param_engine import hypersurface_charts
from daerealize.ratfunc import RatFunc, poly_subs
from daerealize.variables import input_jet, output_jet, state

U = RatFunc.var(input_jet(0))
X1 = state("x1")


def zvars_for(P):
    top = max(v.jet for v in P.variables() if v.name == "y")
    return [output_jet(i) for i in range(top + 1)]


def charts_of(text, mode="rational"):
    P, _ = parse_dae(text)
    return P, hypersurface_charts(P, zvars_for(P), mode=mode)


def on_hypersurface(P, chart):
    zs = zvars_for(P)
    image = poly_subs(P, {zs[i]: chart.gammas[i] for i in range(len(zs))})
    return image.is_zero()


def test_linear_chart_is_found_exactly():
    P, search = charts_of("y' - y*u")
    assert len(search.charts) == 1
    chart = search.charts[0]
    assert chart.gammas == (RatFunc.var(X1), RatFunc.var(X1) * U)
    assert chart.states == (X1,)
    assert on_hypersurface(P, chart)


def test_every_chart_lies_on_the_hypersurface():
    for text in ["y' - y*u", "y - u^2", "y*u - 1", "y' - y", "y'*u - y"]:
        P, search = charts_of(text)
        assert search.charts, text
        for chart in search.charts:
            assert on_hypersurface(P, chart), text


def test_denominator_normalization_shifts_off_a_vanishing_leading_coeff():
    # u*y = 1 forces y = 1/u, whose denominator vanishes at u = 0
    P, search = charts_of("y*u - 1")
    assert search.charts
    chart = search.charts[0]
    assert chart.gammas[0] == RatFunc.const(Fraction(1)) / U
    assert chart.states == ()


def test_zero_dimensional_chart_for_explicit_output():
    P, search = charts_of("y - u^2 - 1")
    assert search.charts
    chart = search.charts[0]
    assert chart.states == ()
    assert chart.gammas[0] == U * U + RatFunc.const(Fraction(1))


def test_curve_component_is_parametrized():
    # y'^2 = 4y: charts need the plane curve through (z0, b)-space
    P, search = charts_of("y'^2 - 4*y")
    assert search.charts
    for chart in search.charts:
        assert on_hypersurface(P, chart)


def test_input_affine_mode_restricts_the_ansatz():
    P, search = charts_of("y - u^2", mode="input-affine")
    # y = u^2 is not affine in u and has no state to hide the square in
    assert not search.charts
    assert search.certified_empty


def test_taints_reported_not_guessed():
    # the circle in (y, u) has no rational chart of the requested shape;
    # the search must not claim a certified no while branches remain open
    _, search = charts_of("y^2 + u^2 - 1")
    assert not search.charts
    assert search.taints
    assert not search.certified_empty


def test_validation_errors():
    P, _ = parse_dae("y' - u")
    with pytest.raises(ValueError):
        hypersurface_charts(P, [output_jet(0)])
    P2, _ = parse_dae("y - u'")
    with pytest.raises(ValueError):
        hypersurface_charts(P2, [output_jet(0)])
