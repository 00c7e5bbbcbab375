"""
A small exact tableau simplex over Fractions.

    max c^T x  s.t.  A x <= b,  x >= 0,  with b >= 0

The slack basis is feasible from the start, so a single phase suffices.
Bland's rule picks both the entering column (smallest index with negative
reduced cost) and the leaving row (minimum ratio, ties to the smallest basic
variable index), which guarantees termination.

Returns a SimplexResult with status in {"optimal", "unbounded"}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidParameterError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplexResult:
    status: str
    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]
    value: Fraction
    pivots: int


def maximize(
    c: Sequence,
    A: Sequence[Sequence],
    b: Sequence,
    max_pivots: Optional[int] = None,
) -> SimplexResult:
    n_vars = len(c)
    n_rows = len(A)
    if any(len(row) != n_vars for row in A) or len(b) != n_rows:
        raise InvalidParameterError("constraint matrix shape does not match c and b")
    if any(Fraction(v) < 0 for v in b):
        raise InvalidParameterError("this solver needs b >= 0 (the slack basis must be feasible)")

    width = n_vars + n_rows + 1
    tableau: List[List[Fraction]] = []
    for i, row in enumerate(A):
        t = [Fraction(v) for v in row] + [Fraction(0)] * n_rows + [Fraction(b[i])]
        t[n_vars + i] = Fraction(1)
        tableau.append(t)
    z = [-Fraction(v) for v in c] + [Fraction(0)] * (n_rows + 1)
    basis = [n_vars + i for i in range(n_rows)]

    def choose_entering() -> Optional[int]:
        for j in range(width - 1):
            if z[j] < 0:
                return j
        return None

    def choose_leaving(col: int) -> Optional[int]:
        best_row = None
        best_ratio = None
        for i in range(n_rows):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_ratio, best_row = ratio, i
        return best_row

    def pivot(row: int, col: int) -> None:
        prow = tableau[row]
        inv = 1 / prow[col]
        prow[:] = [v * inv for v in prow]
        for i in range(n_rows):
            if i == row:
                continue
            factor = tableau[i][col]
            if factor:
                r = tableau[i]
                r[:] = [rv - factor * pv for rv, pv in zip(r, prow)]
        factor = z[col]
        if factor:
            z[:] = [zv - factor * pv for zv, pv in zip(z, prow)]
        basis[row] = col

    pivots = 0
    status = "optimal"
    while True:
        col = choose_entering()
        if col is None:
            break
        row = choose_leaving(col)
        if row is None:
            status = "unbounded"
            break
        pivot(row, col)
        pivots += 1
        if max_pivots is not None and pivots >= max_pivots:
            raise InvalidParameterError(f"simplex did not finish within {max_pivots} pivots")

    x = [Fraction(0)] * n_vars
    for i, var in enumerate(basis):
        if var < n_vars:
            x[var] = tableau[i][-1]
    y = tuple(z[n_vars + i] for i in range(n_rows))
    log.debug("simplex finished: status=%s pivots=%d value=%s", status, pivots, z[-1])
    return SimplexResult(status=status, x=tuple(x), y=y, value=z[-1], pivots=pivots)
