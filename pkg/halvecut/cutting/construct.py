"""Weak cutting constructions. Both sample lines by weight, refine the sample's arrangement
with vertical lines and verify the result before returning it, resampling on failure."""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from math import ceil
from typing import Optional

from halvecut.arrangement import Arrangement, FaceId, Trapezoid, build_arrangement, vertical_decompose
from halvecut.core import config
from halvecut.core.errors import CuttingError, RetriesExhaustedError
from halvecut.geom import Line, as_rational
from halvecut.geom.primitives import ZERO

from .backoff import SampleBackoff
from .models import SAMPLED, VERTICAL_REFINEMENT, Cutting, CuttingParams, CuttingStats, ceil_log2
from .sampling import sample_net
from .verify import verify_cutting
from .weights import WeightedLineSet

logger = logging.getLogger(__name__)

SEED_STRIDE = 1_000_003
BACKOFF_CAP = 16  # largest multiple of the base sample constant
NET_FAILURE = Fraction(1, 2)  # per-attempt failure bound of the sample; failures are resampled


def _attempt_seed(seed: int, attempt: int) -> int:
    return seed * SEED_STRIDE + attempt


def _vertical_refinement(arrangement: Arrangement, alpha: int) -> tuple[list[Line], int, int]:
    """Vertical lines through every alpha-th vertex, in (x, y) order, of each face with more
    than alpha boundary edges."""
    walls: dict[Line, None] = {}
    refined = complexity = 0
    for face in arrangement.faces:
        if face.complexity <= alpha:
            continue
        refined += 1
        complexity += face.complexity
        for v in sorted(face.vertices)[alpha - 1::alpha]:
            walls[Line.vertical(v.x)] = None
    return list(walls), refined, complexity


def _is_trivial(weights: WeightedLineSet, eps: Fraction) -> bool:
    return eps == 1 or weights.total_weight == 0


def weak_cutting(weights: WeightedLineSet, eps: object, params: Optional[CuttingParams] = None) -> Cutting:
    """Oversampled net plus vertical refinement of its large faces."""
    eps = as_rational(eps)
    params = params if params is not None else CuttingParams(eps)
    if params.eps != eps:
        raise CuttingError(f"Params were built for eps={params.eps}, called with eps={eps}")
    if _is_trivial(weights, eps):
        return Cutting.empty()

    alpha = params.alpha
    support = len(weights.positive())
    backoff = SampleBackoff(
        base=params.net_constant_c,
        max_value=params.net_constant_c * BACKOFF_CAP,
        max_tries=params.max_retries,
    )
    report = None
    while (constant := backoff.next_constant()) is not None:
        size = params.sample_size(constant)
        sampled = sample_net(
            weights, params.delta, NET_FAILURE, _attempt_seed(params.seed, backoff.attempts), draws=size
        )
        if len(sampled) == support:
            # Every weighted line was drawn, so no open face is crossed at all.
            logger.debug(f"Weak cutting for eps={eps}: sample drew all {support} weighted lines")
            return Cutting(
                lines=tuple(sampled),
                provenance=(SAMPLED,) * len(sampled),
                stats=CuttingStats(
                    sample_size=size,
                    sampled_lines=len(sampled),
                    attempts=backoff.attempts,
                    net_constant=constant,
                    alpha=alpha,
                ),
            )
        arrangement = build_arrangement(sampled)
        known = set(sampled)
        walls, refined, complexity = _vertical_refinement(arrangement, alpha)
        if len(walls) * alpha > complexity:
            raise CuttingError(f"{len(walls)} vertical lines exceed the budget of {complexity}/{alpha}")
        walls = [w for w in walls if w not in known]

        cutting = Cutting(
            lines=tuple(sampled + walls),
            provenance=(SAMPLED,) * len(sampled) + (VERTICAL_REFINEMENT,) * len(walls),
            stats=CuttingStats(
                sample_size=size,
                sampled_lines=len(sampled),
                refined_faces=refined,
                refinement_complexity=complexity,
                refinement_lines=len(walls),
                attempts=backoff.attempts,
                net_constant=constant,
                alpha=alpha,
            ),
        )
        report = verify_cutting(weights, cutting, eps)
        if report.valid:
            logger.debug(
                f"Weak cutting for eps={eps}: {len(sampled)} sampled + {len(walls)} vertical lines "
                f"after {backoff.attempts} attempt(s)"
            )
            return cutting
        logger.info(
            f"Weak cutting attempt {backoff.attempts} failed: face {report.worst_face} carries "
            f"{report.worst_weight} > {report.limit}. Resampling."
        )

    raise RetriesExhaustedError(
        f"No valid weak cutting for eps={eps} after {backoff.attempts} attempts",
        face=report.worst_face if report else None,
        weight=report.worst_weight if report else None,
        attempts=backoff.attempts,
    )


def _open_overlap(
    lo: Optional[Fraction], hi: Optional[Fraction], left: Optional[Fraction], right: Optional[Fraction]
) -> bool:
    lower = lo if left is None else (left if lo is None else max(lo, left))
    upper = hi if right is None else (right if hi is None else min(hi, right))
    return lower is None or upper is None or lower < upper


def _crosses_slab(line: Line, lo: Optional[Fraction], hi: Optional[Fraction], trap: Trapezoid) -> bool:
    """Whether a line, known to run through a face for parameters in (lo, hi), enters the open
    trapezoid of that face's decomposition."""
    if line.is_vertical:
        x = line.c / line.a
        return (trap.left_x is None or trap.left_x < x) and (trap.right_x is None or x < trap.right_x)
    return _open_overlap(lo, hi, trap.left_x, trap.right_x)


def trapezoid_loads(arrangement: Arrangement, weights: WeightedLineSet) -> dict[tuple[int, int], Fraction]:
    """Crossing weight of every open trapezoid of every face, keyed by (face, piece)."""
    pieces = {
        face.index: vertical_decompose(arrangement, FaceId(2, face.index)) for face in arrangement.faces
    }
    loads: dict[tuple[int, int], Fraction] = defaultdict(lambda: ZERO)
    for line, w in weights.items():
        if not w:
            continue
        for face, lo, hi in arrangement.zone(line):
            for i, trap in enumerate(pieces[face]):
                if _crosses_slab(line, lo, hi, trap):
                    loads[(face, i)] += w
    return dict(loads)


def simple_weak_cutting(
    weights: WeightedLineSet,
    eps: object,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
    net_constant_c: Optional[int] = None,
) -> Cutting:
    """Sampled lines whose vertical decomposition is light everywhere, plus full vertical lines
    through every vertex of their arrangement."""
    eps = as_rational(eps)
    if not (0 < eps <= 1):
        raise CuttingError(f"eps must lie in (0, 1], got {eps}")
    if _is_trivial(weights, eps):
        return Cutting.empty()
    seed = config.SEED if seed is None else seed
    base = config.NET_CONSTANT_C if net_constant_c is None else net_constant_c
    r = ceil(1 / eps)
    limit = eps * weights.total_weight

    backoff = SampleBackoff(
        base=base,
        max_value=base * BACKOFF_CAP,
        max_tries=config.MAX_RETRIES if max_retries is None else max_retries,
    )
    worst: tuple[Optional[tuple[int, int]], Fraction] = (None, ZERO)
    while (constant := backoff.next_constant()) is not None:
        size = constant * r * ceil_log2(r)
        sampled = sample_net(weights, Fraction(1, r), NET_FAILURE, _attempt_seed(seed, backoff.attempts), draws=size)
        arrangement = build_arrangement(sampled)
        loads = trapezoid_loads(arrangement, weights)
        worst = max(loads.items(), key=lambda item: item[1], default=(None, ZERO))
        if worst[1] <= limit:
            known = set(sampled)
            walls = [
                w for w in dict.fromkeys(Line.vertical(x) for x in sorted({v.x for v in arrangement.vertices}))
                if w not in known
            ]
            logger.debug(
                f"Simple weak cutting for eps={eps}: {len(sampled)} sampled + {len(walls)} vertical lines"
            )
            return Cutting(
                lines=tuple(sampled + walls),
                provenance=(SAMPLED,) * len(sampled) + (VERTICAL_REFINEMENT,) * len(walls),
                stats=CuttingStats(
                    sample_size=size,
                    sampled_lines=len(sampled),
                    refined_faces=arrangement.num_faces,
                    refinement_lines=len(walls),
                    attempts=backoff.attempts,
                    net_constant=constant,
                ),
            )
        logger.info(
            f"Simple cutting attempt {backoff.attempts}: trapezoid {worst[0]} carries {worst[1]} > {limit}. "
            f"Resampling."
        )

    raise RetriesExhaustedError(
        f"No valid simple weak cutting for eps={eps} after {backoff.attempts} attempts",
        face=FaceId(2, worst[0][0]) if worst[0] is not None else None,
        weight=worst[1],
        attempts=backoff.attempts,
    )
