"""Differentiation in the jet ring of the input and output signals.

Output and input jets form a free differential tower: the derivative of
name^(k) is name^(k+1), and parameters differentiate to zero.  State and
ansatz variables carry no intrinsic derivative here; dynamics-aware
differentiation lives with the system type.
"""

from __future__ import annotations

from .errors import DaerealizeError
from .mpoly import MPoly
from .ratfunc import RatFunc, quotient_derivative
from .variables import Kind


def _poly_jet_derivative(p: MPoly, kinds: frozenset[Kind], strict: bool) -> MPoly:
    out = MPoly.zero()
    for v in p.variables():
        if strict and v.kind in (Kind.STATE, Kind.ANSATZ):
            raise DaerealizeError(
                f"{v.display()} has no derivative in the jet ring")
        if v.kind in kinds:
            out = out + MPoly.var(v.shifted()) * p.derivative(v)
    return out


def _lift(p, kinds: frozenset[Kind], strict: bool):
    if isinstance(p, MPoly):
        return _poly_jet_derivative(p, kinds, strict)
    if isinstance(p, RatFunc):
        n, d = p.num, p.den
        dn = _poly_jet_derivative(n, kinds, strict)
        dd = _poly_jet_derivative(d, kinds, strict)
        if dd.is_zero():
            return RatFunc(dn, d)
        return quotient_derivative(n, d, dn, dd)
    raise TypeError(f"cannot differentiate {type(p).__name__}")


_SIGNALS = frozenset((Kind.INPUT, Kind.OUTPUT))
_INPUT_ONLY = frozenset((Kind.INPUT,))


def total_derivative(p):
    """Derivative treating every input and output jet as free.

    Raises if p involves state or ansatz variables; those have no meaning
    under jet differentiation.
    """
    return _lift(p, _SIGNALS, strict=True)


def d_u(p):
    """Derivative along the input tower only: u^(j) goes to u^(j+1).

    Output jets and states are held fixed, which is what the state
    elimination steps need when differentiating expressions in k(x, u, ...).
    """
    return _lift(p, _INPUT_ONLY, strict=False)


def ord_of(p, kind: Kind, name: str | None = None) -> int:
    """Highest jet order of the given kind occurring in p, or -1 if absent."""
    best = -1
    for v in p.variables():
        if v.kind is kind and (name is None or v.name == name):
            best = max(best, v.jet)
    return best


def ord_y(p) -> int:
    return ord_of(p, Kind.OUTPUT)


def ord_u(p) -> int:
    return ord_of(p, Kind.INPUT)
