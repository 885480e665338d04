from __future__ import annotations

import logging
import random
from bisect import bisect_right
from fractions import Fraction
from math import ceil, lcm, log
from typing import Optional

from halvecut.core import config
from halvecut.core.errors import CuttingError, EmptyInputError
from halvecut.geom import Line, as_rational

from .weights import WeightedLineSet

logger = logging.getLogger(__name__)


def weighted_draws(weights: WeightedLineSet, count: int, rng: random.Random) -> list[Line]:
    """``count`` independent draws proportional to weight, duplicates collapsed in draw order.

    Weights are scaled to integers so the draw is exact. Drawing stops early once every
    positive-weight line has appeared.
    """
    positive = [(line, w) for line, w in weights.items() if w > 0]
    if not positive:
        raise EmptyInputError("Cannot sample from a line set without positive weight")
    scale = lcm(*(w.denominator for _, w in positive))
    cumulative: list[int] = []
    running = 0
    for _, w in positive:
        running += int(w * scale)
        cumulative.append(running)

    drawn: dict[Line, None] = {}
    for _ in range(count):
        index = bisect_right(cumulative, rng.randrange(running))
        drawn[positive[index][0]] = None
        if len(drawn) == len(positive):
            break
    return list(drawn)


def net_sample_size(
    delta: Fraction,
    phi: Fraction,
    constant: Optional[int] = None,
    dimension: Optional[int] = None,
) -> int:
    """ceil(C_net * (1/delta) * (ln(1/phi) + D * ln(1/delta))), at least 1."""
    c = config.NET_SAMPLE_CONSTANT if constant is None else constant
    d = config.NET_DIMENSION_CONSTANT if dimension is None else dimension
    inv_delta = float(1 / delta)
    return max(1, ceil(c * inv_delta * (log(float(1 / phi)) + d * log(inv_delta))))


def sample_net(
    weights: WeightedLineSet,
    delta: object,
    phi: object,
    seed: int,
    *,
    constant: Optional[int] = None,
    dimension: Optional[int] = None,
    draws: Optional[int] = None,
) -> list[Line]:
    """A weighted sample that is a delta-net with probability at least 1 - phi.

    ``draws`` overrides the sample size for constructions that fix their own oversampling.
    """
    delta, phi = as_rational(delta), as_rational(phi)
    if not (0 < delta <= 1):
        raise CuttingError(f"delta must lie in (0, 1], got {delta}")
    if not (0 < phi < 1):
        raise CuttingError(f"phi must lie in (0, 1), got {phi}")
    size = net_sample_size(delta, phi, constant, dimension) if draws is None else draws
    if size < 1:
        raise CuttingError(f"A net needs at least one draw, got {size}")
    sample = weighted_draws(weights, size, random.Random(seed))
    logger.debug(f"Net sample: {size} draws, {len(sample)} distinct lines")
    return sample
