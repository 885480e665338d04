"""Exact covering LP: minimize sum(x) subject to sum(x_j for j in row) >= 1 per row, x >= 0.

Dense two-phase simplex over Fraction with Bland's rule. Optimal solutions satisfy
x_j <= 1, since any larger coordinate could be lowered to 1 without breaking a row.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from halvecut.core.errors import IterationLimitError, LPError
from halvecut.geom.primitives import ONE, ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoveringSolution:
    x: tuple[Fraction, ...]
    value: Fraction
    duals: tuple[Fraction, ...]  # one multiplier per row; sum equals value
    pivots: int


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int], max_pivots: Optional[int]):
        self.rows = rows
        self.basis = basis
        self.objective: list[Fraction] = []
        self.pivots = 0
        self.max_pivots = max_pivots

    def pivot(self, r: int, col: int) -> None:
        if self.max_pivots is not None and self.pivots >= self.max_pivots:
            raise IterationLimitError(f"Simplex exceeded {self.max_pivots} pivots", iterations=self.pivots)
        self.pivots += 1
        row = self.rows[r]
        p = row[col]
        if p != ONE:
            self.rows[r] = row = [v / p for v in row]
        for i, other in enumerate(self.rows):
            f = other[col]
            if i != r and f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        f = self.objective[col]
        if f:
            self.objective = [a - f * b for a, b in zip(self.objective, row)]
        self.basis[r] = col

    def run(self, allowed: int) -> None:
        """Pivots to optimality over the first ``allowed`` columns (Bland's rule)."""
        while True:
            col = next((j for j in range(allowed) if self.objective[j] < 0), None)
            if col is None:
                return
            best: Optional[int] = None
            best_ratio: Optional[Fraction] = None
            for i, row in enumerate(self.rows):
                if row[col] > 0:
                    ratio = row[-1] / row[col]
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[best])
                    ):
                        best, best_ratio = i, ratio
            if best is None:
                raise LPError("Covering LP reported unbounded")
            self.pivot(best, col)


def _undominated(present: set[int], rows: Sequence[Sequence[int]]) -> set[int]:
    """Drops every variable whose rows are a subset of another variable's rows.

    Shifting weight from a dominated column to its dominator never breaks a row, so the optimum
    is unchanged and the duals stay feasible for the dropped columns. Ties keep the lowest index.
    """
    masks: dict[int, int] = dict.fromkeys(present, 0)
    for i, row in enumerate(rows):
        for j in row:
            masks[j] |= 1 << i
    kept: list[tuple[int, int]] = []
    for j in sorted(present, key=lambda j: (-masks[j].bit_count(), j)):
        mask = masks[j]
        if not any(mask & other == mask for _, other in kept):
            kept.append((j, mask))
    return {j for j, _ in kept}


def solve_covering_lp(
    num_vars: int, rows: Sequence[Sequence[int]], max_pivots: Optional[int] = None
) -> CoveringSolution:
    """Solves the covering LP whose i-th constraint sums the variables listed in rows[i]."""
    if any(not row for row in rows):
        raise LPError("A covering row without variables can never be satisfied")
    if not rows:
        return CoveringSolution((ZERO,) * num_vars, ZERO, (), 0)

    present = {j for row in rows for j in row}
    if max(present) >= num_vars or min(present) < 0:
        raise LPError(f"Row references a variable outside 0..{num_vars - 1}")
    used = _undominated(present, rows)
    rows = [[j for j in row if j in used] for row in rows]
    used = sorted(used)
    column = {j: c for c, j in enumerate(used)}
    n, m = len(used), len(rows)
    width = n + 2 * m  # x columns, surplus columns, artificial columns

    table: list[list[Fraction]] = []
    for i, row in enumerate(rows):
        line = [ZERO] * (width + 1)
        for j in set(row):
            line[column[j]] = ONE
        line[n + i] = -ONE
        line[n + m + i] = ONE
        line[-1] = ONE
        table.append(line)
    tableau = _Tableau(table, [n + m + i for i in range(m)], max_pivots)

    # Phase 1: minimize the artificial sum.
    objective = [ZERO] * (width + 1)
    for line in table:
        for c in range(n):
            objective[c] -= line[c]
    for i in range(m):
        objective[n + i] = ONE
    objective[-1] = -Fraction(m)
    tableau.objective = objective
    tableau.run(width)
    if tableau.objective[-1] != 0:
        raise LPError("Covering LP is infeasible")

    for i in range(m):
        if tableau.basis[i] >= n + m:
            col = next((c for c in range(n + m) if tableau.rows[i][c] != 0), None)
            if col is not None:
                tableau.pivot(i, col)

    # Phase 2: minimize sum(x) without letting artificials back in.
    objective = [ONE] * n + [ZERO] * (2 * m + 1)
    for i, b in enumerate(tableau.basis):
        if b < n:
            objective = [a - v for a, v in zip(objective, tableau.rows[i])]
    tableau.objective = objective
    tableau.run(n + m)

    x = [ZERO] * num_vars
    for i, b in enumerate(tableau.basis):
        if b < n:
            x[used[b]] = tableau.rows[i][-1]
    value = -tableau.objective[-1]
    duals = tuple(tableau.objective[n + i] for i in range(m))
    logger.debug(f"Covering LP with {n} variables and {m} rows solved in {tableau.pivots} pivots: {value}")
    return CoveringSolution(tuple(x), value, duals, tableau.pivots)
