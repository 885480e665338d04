from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from halvecut.geom import Line, as_rational
from halvecut.lp import solve_covering_lp

from .constraints import ViolatedConstraint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FractionalSolution:
    x: Mapping[Line, Fraction] = field(hash=False)
    t: Fraction
    value: Fraction
    pivots: int = 0

    def positive(self) -> list[tuple[Line, Fraction]]:
        return [(line, v) for line, v in self.x.items() if v > 0]


@dataclass(frozen=True)
class Infeasible:
    """No point of the explicit system has sum(x) <= t. ``lp_value`` is the covering optimum
    (None when some constraint has no candidate line) and ``duals`` certify it."""

    t: Fraction
    lp_value: Optional[Fraction]
    duals: tuple[Fraction, ...] = ()


def lp_feasible(
    candidates: Sequence[Line],
    constraints: Sequence[ViolatedConstraint],
    t: object,
    max_pivots: Optional[int] = None,
) -> Union[FractionalSolution, Infeasible]:
    t = as_rational(t)
    index = {line: i for i, line in enumerate(candidates)}
    rows = []
    for constraint in constraints:
        row = [index[line] for line in constraint.lines_crossing if line in index]
        if not row:
            return Infeasible(t, None)
        rows.append(row)
    solution = solve_covering_lp(len(candidates), rows, max_pivots)
    if solution.value > t:
        logger.debug(f"LP optimum {solution.value} exceeds budget {t}")
        return Infeasible(t, solution.value, solution.duals)
    return FractionalSolution(
        {line: solution.x[i] for i, line in enumerate(candidates)}, t, solution.value, solution.pivots
    )
