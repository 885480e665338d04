from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from halvecut.core.errors import CuttingError, RetriesExhaustedError
from halvecut.core.instance import Instance
from halvecut.cutting import Cutting, CuttingParams, WeightedLineSet, weak_cutting
from halvecut.geom import Line
from halvecut.geom.primitives import ONE, ZERO

from .cells import Cell, PointSignatures
from .constraints import ViolatedConstraint
from .program import FractionalSolution

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
ROUNDING_SEED_STRIDE = 7_919


@dataclass(frozen=True)
class Rounded:
    """A rounding attempt that separated every set: the cutting lines form a valid solution."""

    lines: tuple[Line, ...]
    cutting: Cutting
    attempts: int


def rounding_eps(value: Fraction) -> Fraction:
    """1 / (2 * max(value, 1))."""
    return ONE / (2 * max(value, ONE))


def _witness(instance: Instance, cell: Cell) -> Optional[int]:
    return next((i for i, count in enumerate(cell.counts) if count > instance.sets[i].limit), None)


def separate(
    instance: Instance,
    solution: FractionalSolution,
    params: Optional[CuttingParams] = None,
    *,
    signatures: Optional[PointSignatures] = None,
    limit: Optional[int] = None,
) -> Union[Rounded, list[ViolatedConstraint]]:
    """Rounds x with a weak cutting of the candidate lines weighted by x.

    Returns the cutting when no cell of any dimension is overloaded, otherwise up to ``limit``
    overloaded cells as constraints, in side-vector order. The cutting caps the value crossing
    every cell at 1/2; a heavier overloaded cell raises CuttingError. When every overloaded
    cell sits exactly at 1/2 the cutting is resampled.
    """
    eps = rounding_eps(solution.value)
    template = params if params is not None else CuttingParams(eps)
    signatures = signatures if signatures is not None else PointSignatures(instance)
    candidates = list(solution.x)
    weights = WeightedLineSet.from_pairs(solution.positive())

    for attempt in range(template.max_retries):
        attempt_params = replace(template, eps=eps, seed=template.seed * ROUNDING_SEED_STRIDE + attempt)
        cutting = weak_cutting(weights, eps, attempt_params)
        lines = cutting.lines
        found: list[ViolatedConstraint] = []
        tied = 0
        for cell in signatures.cells(lines):
            if cell.dim == 0:
                continue  # a vertex holds one point, and every limit is at least 1
            witness = _witness(instance, cell)
            if witness is None:
                continue
            region = signatures.region(lines, cell)
            crossing = tuple(sorted(c for c in candidates if signatures.crosses(cell, c, region)))
            value = sum((solution.x[line] for line in crossing), ZERO)
            if value > HALF:
                raise CuttingError(
                    f"Overloaded cell {cell.signs} carries value {value} > 1/2 under a verified cutting"
                )
            if value == HALF:
                tied += 1
                continue
            owned = set(instance.sets[witness].points)
            found.append(
                ViolatedConstraint(
                    region=region,
                    signs=cell.signs,
                    cutting_lines=lines,
                    lines_crossing=crossing,
                    witness_set_index=witness,
                    witness_count=cell.counts[witness],
                    fractional_value=value,
                    witness_points=tuple(p for p in cell.members if p in owned),
                )
            )
            if limit is not None and len(found) >= limit:
                break
        if found:
            return found
        if not tied:
            logger.debug(f"Rounding succeeded with {cutting.size} lines on attempt {attempt + 1}")
            return Rounded(lines, cutting, attempt + 1)
        logger.info(f"{tied} overloaded cell(s) sit exactly at value 1/2; resampling the cutting")

    raise RetriesExhaustedError(
        f"Rounding found only overloaded cells at value 1/2 in {template.max_retries} attempts",
        weight=HALF,
        attempts=template.max_retries,
    )


def round_fractional(
    instance: Instance,
    solution: FractionalSolution,
    params: Optional[CuttingParams] = None,
    *,
    signatures: Optional[PointSignatures] = None,
) -> Union[Rounded, ViolatedConstraint]:
    """The cutting, or the first overloaded cell as a single constraint."""
    outcome = separate(instance, solution, params, signatures=signatures, limit=1)
    return outcome if isinstance(outcome, Rounded) else outcome[0]
