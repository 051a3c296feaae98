"""Symbols and the global variable order shared by all exact arithmetic.

Every polynomial in the package is written over a single open-ended pool of
symbols.  A symbol is one of five kinds: a parameter (a transcendental
constant such as a reaction rate), a state variable, an internal ansatz
unknown, an input jet u, u', u'', ..., or an output jet y, y', y'', ....

The global order is

    parameters < states < ansatz unknowns < input jets < output jets,

with parameters, states and ansatz unknowns compared by name (natural order,
so x2 < x10) and jets compared by derivative order.  Monomials are compared
graded-lexicographically with respect to this order, which fixes leading
terms, canonical normalizations and printed output once and for all.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field


class Kind(enum.IntEnum):
    """Symbol kinds, least significant first."""

    PARAM = 0
    STATE = 1
    ANSATZ = 2
    INPUT = 3
    OUTPUT = 4


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_SPLIT_RE = re.compile(r"\A([A-Za-z_]*?)(\d*)\Z")


def _natural(name: str) -> tuple[str, int]:
    """Split a trailing integer off a name so that x2 sorts below x10."""
    m = _SPLIT_RE.match(name)
    if m and m.group(2):
        return m.group(1), int(m.group(2))
    return name, -1


@dataclass(frozen=True)
class Var:
    """One symbol.  ``jet`` is the derivative order of an input/output jet.

    Parameters, states and ansatz unknowns never carry a jet order; input
    and output symbols exist at every jet order (y is the jet of order 0).
    """

    kind: Kind
    name: str
    jet: int = 0
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"bad symbol name {self.name!r}")
        if self.jet < 0:
            raise ValueError("jet order must be nonnegative")
        if self.jet and self.kind not in (Kind.INPUT, Kind.OUTPUT):
            raise ValueError(
                f"{self.kind.name.lower()} symbol {self.name!r} cannot have a jet order"
            )
        object.__setattr__(
            self, "key", (int(self.kind), _natural(self.name), self.jet)
        )
        object.__setattr__(self, "_h", hash((int(self.kind), self.name, self.jet)))

    def __hash__(self) -> int:
        # hot path: polynomials hash symbols constantly, so cache it
        return self._h

    def shifted(self, steps: int = 1) -> "Var":
        """The same symbol ``steps`` jet orders higher."""
        return Var(self.kind, self.name, self.jet + steps)

    def display(self) -> str:
        if self.jet == 0:
            return self.name
        if self.jet <= 2:
            return self.name + "'" * self.jet
        return f"{self.name}^({self.jet})"

    def __lt__(self, other: "Var") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return self.display()


def param(name: str) -> Var:
    return Var(Kind.PARAM, name)


def state(name: str) -> Var:
    return Var(Kind.STATE, name)


def ansatz(name: str) -> Var:
    return Var(Kind.ANSATZ, name)


def input_jet(order: int = 0, name: str = "u") -> Var:
    return Var(Kind.INPUT, name, order)


def output_jet(order: int = 0, name: str = "y") -> Var:
    return Var(Kind.OUTPUT, name, order)
