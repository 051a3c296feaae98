"""Exact linear algebra over the rational-function field.

Systems are cleared of denominators row by row and eliminated with the
fraction-free Bareiss recurrence, so every intermediate entry stays
polynomial and every division is exact.  Solutions are reconstructed as
reduced rational functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .mpoly import MPoly
from .polytools import divexact, poly_lcm
from .ratfunc import RatFunc


@dataclass(frozen=True)
class FFMatrix:
    """A rows x cols matrix of RatFunc entries."""

    rows: tuple[tuple[RatFunc, ...], ...]

    def __post_init__(self):
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @staticmethod
    def from_rows(rows) -> "FFMatrix":
        return FFMatrix(tuple(tuple(RatFunc._coerce(e) for e in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> RatFunc:
        return self.rows[i][j]


class SolveTag(Enum):
    UNIQUE = "unique"
    SPACE = "space"
    INCONSISTENT = "inconsistent"


@dataclass
class SolveResult:
    """Outcome of an exact linear solve.

    ``solution`` is a particular solution (free unknowns set to zero) when
    the system is consistent, otherwise None.  ``nullspace`` is a basis of
    the homogeneous solution space (empty for UNIQUE).
    """

    tag: SolveTag
    solution: list[RatFunc] | None
    nullspace: list[list[RatFunc]] = field(default_factory=list)
    rank: int = 0


def _clear_rows(a: FFMatrix, b: list[RatFunc]) -> list[list[MPoly]]:
    """Augmented integer-polynomial rows, one common denominator per row."""
    out = []
    for i in range(a.nrows):
        entries = list(a.rows[i]) + [b[i]]
        den = MPoly.const(1)
        for e in entries:
            den = poly_lcm(den, e.den)
        row = []
        for e in entries:
            row.append(e.num * divexact(den, e.den))
        out.append(row)
    return out


def ff_solve(a: FFMatrix, b: list[RatFunc]) -> SolveResult:
    """Solve a x = b exactly by fraction-free elimination.

    Returns UNIQUE with the single solution, SPACE with a particular
    solution plus a nullspace basis, or INCONSISTENT.
    """
    if a.nrows != len(b):
        raise ValueError("dimension mismatch")
    m, n = a.nrows, a.ncols
    rows = _clear_rows(a, b)
    colperm = list(range(n))
    prev = MPoly.const(1)
    rank = 0
    for k in range(min(m, n)):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if not rows[i][j].is_zero():
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != k:
            rows[k], rows[pi] = rows[pi], rows[k]
        if pj != k:
            for r in rows:
                r[k], r[pj] = r[pj], r[k]
            colperm[k], colperm[pj] = colperm[pj], colperm[k]
        for i in range(k + 1, m):
            for j in range(k + 1, n + 1):
                num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = divexact(num, prev)
            rows[i][k] = MPoly.zero()
        prev = rows[k][k]
        rank = k + 1
    for i in range(rank, m):
        if not rows[i][n].is_zero():
            return SolveResult(SolveTag.INCONSISTENT, None, [], rank)

    def back_substitute(rhs_col: list[MPoly], free_values: dict[int, RatFunc]) -> list[RatFunc]:
        # solve the rank x rank triangular head; free columns get fixed values
        x = [RatFunc.zero()] * n
        for j, val in free_values.items():
            x[j] = val
        for k in range(rank - 1, -1, -1):
            acc = RatFunc(rhs_col[k])
            for j in range(k + 1, n):
                if not rows[k][j].is_zero() and x[j]:
                    acc = acc - RatFunc(rows[k][j]) * x[j]
            x[k] = acc / RatFunc(rows[k][k])
        out = [RatFunc.zero()] * n
        for pos, orig in enumerate(colperm):
            out[orig] = x[pos]
        return out

    particular = back_substitute([rows[i][n] for i in range(rank)],
                                 {j: RatFunc.zero() for j in range(rank, n)})
    if rank == n:
        return SolveResult(SolveTag.UNIQUE, particular, [], rank)
    basis = []
    zero_rhs = [MPoly.zero()] * rank
    for free in range(rank, n):
        vals = {j: RatFunc.zero() for j in range(rank, n)}
        vals[free] = RatFunc.const(1)
        basis.append(back_substitute(zero_rhs, vals))
    return SolveResult(SolveTag.SPACE, particular, basis, rank)


def rank_of(a: FFMatrix) -> int:
    zero = [RatFunc.zero()] * a.nrows
    return ff_solve(a, zero).rank


def det_of(a: FFMatrix) -> RatFunc:
    """Determinant of a square RatFunc matrix."""
    if a.nrows != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    den = RatFunc.const(1)
    rows = []
    for i in range(a.nrows):
        d = MPoly.const(1)
        for e in a.rows[i]:
            d = poly_lcm(d, e.den)
        den = den * RatFunc(d)
        rows.append([e.num * divexact(d, e.den) for e in a.rows[i]])
    from .polytools import bareiss_det

    return RatFunc(bareiss_det(rows)) / den
