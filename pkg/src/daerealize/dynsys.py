"""Rational input-state-output systems and their differential invariants.

A system is x' = f(x, u), y = g(x, u) with f and g rational over Q, plus an
optional tuple of symbolic constant parameters.  The derived object almost
everything else consumes is the sequence of output derivatives

    gamma_0 = g,   gamma_{i+1} = sum_j f_j * dgamma_i/dx_j + D_u(gamma_i)

where D_u shifts input jets.  This module provides that sequence, the
dominance (submersivity) test, recovery of candidate rates from a chart of
output derivatives, realization verification, and state elimination down to
an input-output equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffring import d_u, ord_of, ord_u, ord_y
from .errors import DaerealizeError, PoleError, UnsupportedError
from .factor import factor
from .linalg import FFMatrix, SolveTag, ff_solve, rank_of
from .mpoly import MPoly, poly_text
from .polytools import divexact, poly_lcm, squarefree_decomposition
from .polytools import resultant
from .ratfunc import RatFunc, subs_is_zero
from .variables import Kind, Var, input_jet, output_jet

INPUT_VAR = input_jet()


def _allowed_vars(states, params):
    return frozenset(states) | frozenset(params) | {INPUT_VAR}


@dataclass(frozen=True)
class DynSystem:
    """x' = rates(x, u), y = output(x, u) over Q(params)."""

    states: tuple[Var, ...]
    rates: tuple[RatFunc, ...]
    output: RatFunc
    params: tuple[Var, ...] = ()

    def __post_init__(self):
        if len(self.rates) != len(self.states):
            raise DaerealizeError("one rate per state is required")
        if len(set(self.states)) != len(self.states):
            raise DaerealizeError("duplicate state")
        for x in self.states:
            if x.kind is not Kind.STATE:
                raise DaerealizeError(f"{x.display()} is not a state variable")
        for p in self.params:
            if p.kind is not Kind.PARAM:
                raise DaerealizeError(f"{p.display()} is not a parameter")
        allowed = _allowed_vars(self.states, self.params)
        for r in (*self.rates, self.output):
            stray = sorted(set(r.variables()) - allowed)
            if stray:
                names = ", ".join(v.display() for v in stray)
                raise DaerealizeError(f"foreign variable in system: {names}")

    @property
    def dim(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class Parametrization:
    """A chart gamma_0..gamma_h of candidate output derivatives in k(x, u-jets)."""

    gammas: tuple[RatFunc, ...]
    states: tuple[Var, ...]

    @property
    def order(self) -> int:
        return len(self.gammas) - 1


def lie_derivative(sys: DynSystem, r: RatFunc) -> RatFunc:
    out = d_u(r)
    for x, fx in zip(sys.states, sys.rates):
        out = out + fx * r.derivative(x)
    return out


def lie_sequence(sys: DynSystem, order: int) -> list[RatFunc]:
    """[gamma_0, ..., gamma_order]."""
    gammas = [sys.output]
    for _ in range(order):
        gammas.append(lie_derivative(sys, gammas[-1]))
    return gammas


def jacobian(entries: list[RatFunc], states: tuple[Var, ...]) -> FFMatrix:
    return FFMatrix.from_rows(
        [[r.derivative(x) for x in states] for r in entries])


def check_dominance(sys: DynSystem, h: int) -> bool:
    """Do the first h output derivatives move independently with the state?

    Rank of the h x n Jacobian of gamma_0..gamma_{h-1} in the states must be
    h; realizations of an order-h equation must pass this.
    """
    if h == 0:
        return True
    gammas = lie_sequence(sys, h - 1)
    return rank_of(jacobian(gammas, sys.states)) == h


def build_realizability_system(par: Parametrization):
    """Linear system J * f = rhs the rates of any realization must satisfy.

    Row i says: applying the unknown derivation to gamma_i must give
    gamma_{i+1}.  The input-jet part D_u(gamma_i) is known and moves to the
    right-hand side.
    """
    h = par.order
    rows = [[par.gammas[i].derivative(x) for x in par.states] for i in range(h)]
    rhs = [par.gammas[i + 1] - d_u(par.gammas[i]) for i in range(h)]
    return FFMatrix.from_rows(rows), rhs


def _stack_split(p: MPoly, is_stack) -> dict:
    """Group the terms of p by their stack-variable part."""
    groups: dict = {}
    for mono, coeff in p.terms.items():
        stack = tuple(ve for ve in mono if is_stack(ve[0]))
        base = tuple(ve for ve in mono if not is_stack(ve[0]))
        bucket = groups.setdefault(stack, {})
        bucket[base] = bucket.get(base, Fraction(0)) + coeff
    out = {}
    for s, d in groups.items():
        cleaned = {m: c for m, c in d.items() if c}
        if cleaned:
            out[s] = MPoly._raw(cleaned)
    return out


def _constrained_solve(J: FFMatrix, rhs: list[RatFunc], basis: list[MPoly],
                       is_stack) -> list[RatFunc] | None:
    """Solve J*f = rhs with f_j restricted to span(basis) over the subfield
    of non-stack variables.  Returns one solution or None."""
    h, n = J.nrows, J.ncols
    nb = len(basis)
    rows_out: list[list[RatFunc]] = []
    rhs_out: list[RatFunc] = []
    for i in range(h):
        dens = [J.entry(i, j).den for j in range(n)] + [rhs[i].den]
        lead = dens[0]
        for d in dens[1:]:
            lead = poly_lcm(lead, d)
        cleared = [J.entry(i, j).num * divexact(lead, J.entry(i, j).den)
                   for j in range(n)]
        q = rhs[i].num * divexact(lead, rhs[i].den)
        table: dict = {}
        for j in range(n):
            for k, bas in enumerate(basis):
                for smono, cpoly in _stack_split(cleared[j] * bas, is_stack).items():
                    row = table.setdefault(smono, [MPoly.zero()] * (n * nb))
                    row[j * nb + k] = row[j * nb + k] + cpoly
        qtab = _stack_split(q, is_stack)
        for smono in sorted(set(table) | set(qtab)):
            coeffs = table.get(smono, [MPoly.zero()] * (n * nb))
            rows_out.append([RatFunc(c) for c in coeffs])
            rhs_out.append(RatFunc(qtab.get(smono, MPoly.zero())))
    res = ff_solve(FFMatrix.from_rows(rows_out), rhs_out)
    if res.tag is SolveTag.INCONSISTENT:
        return None
    z = res.solution
    out = []
    for j in range(n):
        fj = RatFunc.zero()
        for k, bas in enumerate(basis):
            fj = fj + z[j * nb + k] * RatFunc(bas)
        out.append(fj)
    for i in range(h):
        acc = RatFunc.zero()
        for j in range(n):
            acc = acc + J.entry(i, j) * out[j]
        if acc != rhs[i]:
            raise DaerealizeError("constrained solve failed verification")
    return out


def is_rational_class(r: RatFunc) -> bool:
    """In k(x, u): no input jets beyond u itself."""
    return ord_of(r, Kind.INPUT) <= 0


def is_affine_class(r: RatFunc) -> bool:
    """Of the form a(x) + b(x)*u."""
    if ord_of(r, Kind.INPUT) > 0:
        return False
    if any(v.kind is Kind.INPUT for v in r.den.variables()):
        return False
    return r.num.degree(INPUT_VAR) <= 1


def solve_realization(par: Parametrization, klass: str = "rational"):
    """Rates f making the chart a genuine derivative sequence, or None.

    klass "rational" asks for f in k(x, u); "input-affine" for
    f = a(x) + b(x)*u componentwise.
    """
    J, rhs = build_realizability_system(par)
    one = MPoly.const(Fraction(1))
    if klass == "rational":
        basis = [one]
        is_stack = lambda v: v.kind is Kind.INPUT and v.jet >= 1
    elif klass == "input-affine":
        basis = [one, MPoly.var(INPUT_VAR)]
        is_stack = lambda v: v.kind is Kind.INPUT
    else:
        raise ValueError(f"unknown system class {klass!r}")
    f = _constrained_solve(J, rhs, basis, is_stack)
    if f is None:
        return None
    return tuple(f)


def assemble_system(par: Parametrization, rates, params=()) -> DynSystem:
    return DynSystem(states=par.states, rates=tuple(rates),
                     output=par.gammas[0], params=tuple(params))


def verify_realization(sys: DynSystem, dae: MPoly) -> bool:
    """Does the system realize the equation?

    Two requirements: the equation vanishes identically after substituting
    the output derivative sequence, and the system is dominant at the
    equation's output order.
    """
    h = ord_y(dae)
    if h < 0:
        raise ValueError("equation involves no output jet")
    gammas = lie_sequence(sys, h)
    mapping = {output_jet(i): gammas[i] for i in range(h + 1)}
    try:
        if not subs_is_zero(dae, mapping):
            return False
    except PoleError:
        return False
    return check_dominance(sys, h)


def _squarefree_product(p: MPoly) -> MPoly:
    _, pieces = squarefree_decomposition(p)
    out = MPoly.const(Fraction(1))
    for f, _m in pieces:
        out = out * f
    return out


def io_equation(sys: DynSystem) -> MPoly:
    """Minimal verified input-output equation of the system.

    States are eliminated one at a time by resultants against a lowest
    degree pivot; every irreducible factor of what remains is tested as a
    realization certificate and the smallest surviving one is returned,
    normalized monic.  Systems with more than three states are out of scope.
    """
    n = sys.dim
    if n > 3:
        raise UnsupportedError("state elimination implemented for up to three states")
    gammas = lie_sequence(sys, n)
    polys = []
    for i, g in enumerate(gammas):
        e = (RatFunc.var(output_jet(i)) - g)
        polys.append(e.num.primitive_signed()[1])
    for x in reversed(sys.states):
        involved = [p for p in polys if p.degree(x) > 0]
        rest = [p for p in polys if p.degree(x) <= 0]
        if not involved:
            continue
        if len(involved) == 1:
            polys = rest
            continue
        pivot = min(involved, key=lambda p: (p.degree(x), involved.index(p)))
        new = []
        for q in involved:
            if q is pivot:
                continue
            r = resultant(pivot, q, x)
            if r.is_zero():
                raise UnsupportedError(
                    f"vanishing resultant while eliminating {x.display()}")
            new.append(_squarefree_product(r.primitive_signed()[1]))
        polys = rest + new
    candidates = set()
    for p in polys:
        if p.is_const():
            continue
        for f in factor(p).irreducibles():
            if any(v.kind is Kind.OUTPUT for v in f.variables()):
                candidates.add(f)
    verified = [f for f in candidates if verify_realization(sys, f)]
    if not verified:
        raise UnsupportedError("no eliminant factor verified as input-output equation")
    best = min(verified, key=lambda f: (ord_y(f), ord_u(f), f.total_degree(),
                                        poly_text(f)))
    return best.monic()
