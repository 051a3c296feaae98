"""Triangular solving of polynomial systems by safe linear eliminations.

The systems coming out of the ansatz stage live in a handful of unknown
coefficients over a base of transcendental variables.  An unknown v is
eliminated only from an equation that is linear in v and free of every
other unsolved unknown; such a step divides by a nonzero base polynomial
and loses nothing.  Unknowns are eliminated greedily until none remain or
the survivors resist.

With all unknowns solved, any residual base-only equation certifies the
system empty (base variables are transcendental).  With exactly one
unknown w left, the remaining equations generate a principal ideal in
k(base)[w]; its gcd q describes the solution set, a curve over the base.
A constant nonzero q again certifies emptiness.  Anything else - several
stuck unknowns, or no constraint at all on w - is reported unsupported
rather than guessed at.  Linear combinations of the stuck unknowns are
tried as a last resort separator; the elimination rule makes them inert,
but they are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import UnsupportedError
from .mpoly import MPoly
from .polytools import poly_gcd, primitive_in
from .ratfunc import RatFunc, poly_subs
from .variables import Kind, Var


@dataclass(frozen=True)
class TriangularSolution:
    """Solved unknowns, plus the residual curve when one unknown is left.

    assignments map each solved unknown to a base-only expression.  When
    ``separator`` is None every unknown was solved and the solution is the
    unique rational point.  Otherwise ``residual`` is a polynomial in the
    separator and base variables, primitive in the separator, and the
    solution set is its zero locus.
    """

    assignments: dict[Var, RatFunc]
    separator: Var | None = None
    residual: MPoly | None = None


def _eliminate(eqs: list[MPoly], unknowns: list[Var]):
    """Greedy strict elimination; returns (assignments, remaining eqs,
    unsolved unknowns)."""
    eqs = [e.primitive_signed()[1] for e in eqs if not e.is_zero()]
    assignments: dict[Var, RatFunc] = {}
    unsolved = list(unknowns)
    progress = True
    while progress:
        progress = False
        for v in list(unsolved):
            pick = None
            for e in eqs:
                if e.degree(v) != 1:
                    continue
                if any(w in e.variables() for w in unsolved if w is not v):
                    continue
                pick = e
                break
            if pick is None:
                continue
            a = pick.coeff_in(v, 1)
            b = pick.coeff_in(v, 0)
            # a, b are base-only, so the division is by a nonzero function
            value = RatFunc(-b, a)
            assignments[v] = value
            unsolved.remove(v)
            new_eqs = []
            for e in eqs:
                if e is pick:
                    continue
                r = poly_subs(e, {v: value}).num
                if not r.is_zero():
                    new_eqs.append(r.primitive_signed()[1])
            eqs = new_eqs
            progress = True
    return assignments, eqs, unsolved


def _finalize(assignments, eqs, unsolved):
    # eqs are nonzero by construction: any base-only survivor is a
    # contradiction over transcendental base variables
    if len(unsolved) == 0:
        if eqs:
            return None
        return TriangularSolution(assignments=assignments)
    if len(unsolved) > 1:
        raise UnsupportedError(
            "system does not triangularize by safe linear steps")
    w = unsolved[0]
    with_w = [e for e in eqs if w in e.variables()]
    if len(with_w) != len(eqs):
        return None
    if not with_w:
        raise UnsupportedError(
            "solution set is not zero-dimensional over the base field")
    q = with_w[0]
    for e in with_w[1:]:
        q = poly_gcd(q, e)
    q = primitive_in(q, w)
    if q.degree(w) == 0:
        return None
    return TriangularSolution(assignments=assignments, separator=w,
                              residual=q.primitive_signed()[1])


def solve_triangular(eqs: list[MPoly], unknowns: list[Var]):
    """Solve for the unknowns over the base field of the other variables.

    Returns a TriangularSolution, or None when the system is certified to
    have no solution.  Raises UnsupportedError when the system resists the
    safe elimination steps.
    """
    assignments, rest, unsolved = _eliminate(eqs, unknowns)
    if len(unsolved) <= 1:
        return _finalize(assignments, rest, unsolved)
    if len(unsolved) > 3:
        # the combination search below is exponential in the unknowns
        raise UnsupportedError(
            "system does not triangularize by safe linear steps")
    # last resort: try a fresh separator that is a small positive integer
    # combination of the stuck unknowns
    combo_error = None
    for coeffs in product(range(1, 6), repeat=len(unsolved)):
        w = Var(Kind.ANSATZ, "_sep")
        combo = MPoly.var(w)
        for c, v in zip(coeffs, unsolved):
            combo = combo - MPoly.const(c) * MPoly.var(v)
        try:
            assignments2, rest2, unsolved2 = _eliminate(
                rest + [combo], unsolved + [w])
            if len(unsolved2) <= 1:
                return _finalize(assignments2, rest2, unsolved2)
        except UnsupportedError as exc:
            combo_error = exc
    raise combo_error or UnsupportedError(
        "system does not triangularize by safe linear steps")
