from __future__ import annotations

import logging
import random
from itertools import combinations
from math import ceil, log
from typing import Optional, Sequence

from halvecut.core import config
from halvecut.core.instance import Instance
from halvecut.corridor import Corridor
from halvecut.geom import Line, Point

logger = logging.getLogger(__name__)


def net_size(fraction, k: int, constant: Optional[int] = None) -> int:
    """Draws for an (fr/2)-net of one set: ceil(C_net * (2/fr) * ln(k/fr + 2))."""
    c = config.NET_SAMPLE_CONSTANT if constant is None else constant
    return max(1, ceil(c * float(2 / fraction) * log(float(k / fraction) + 2)))


def pair_lines(points: Sequence[Point]) -> list[Line]:
    """Distinct lines through pairs of the given points, in canonical order."""
    return sorted({Line.through(p, q) for p, q in combinations(sorted(set(points)), 2)})


def draw_nets(instance: Instance, seed: int, constant: Optional[int] = None) -> list[list[Point]]:
    rng = random.Random(seed)
    nets = []
    for point_set in instance.sets:
        draws = net_size(point_set.fraction, instance.k, constant)
        nets.append(sorted({rng.choice(point_set.points) for _ in range(draws)}))
    return nets


def verify_corridor_net(points: Sequence[Point], net: Sequence[Point], fraction) -> Optional[Corridor]:
    """Exhaustive check of the (fraction/2)-net property over corridors of up to three net pair
    lines. Returns a corridor that holds too many points strictly inside while avoiding the net,
    or None when the net passes."""
    limit = fraction * len(points) / 2
    lines = [line for line in pair_lines(net) if not line.is_vertical]
    for size in (2, 3):
        for generators in combinations(lines, size):
            corridor = Corridor(generators)
            if any(corridor.strictly_contains(p) for p in net):
                continue
            inside = sum(1 for p in points if corridor.strictly_contains(p))
            if inside > limit:
                return corridor
    return None


def candidate_lines(
    instance: Instance,
    seed: int,
    *,
    constant: Optional[int] = None,
    verify_net: bool = False,
    max_retries: Optional[int] = None,
) -> list[Line]:
    """Lines through pairs of points of per-set random nets.

    With verify_net, each set's net is redrawn until it passes verify_corridor_net or the retry
    budget runs out (the last draw is then kept).
    """
    nets = draw_nets(instance, seed, constant)
    if verify_net:
        budget = config.MAX_RETRIES if max_retries is None else max_retries
        for i, point_set in enumerate(instance.sets):
            attempt = 0
            while verify_corridor_net(point_set.points, nets[i], point_set.fraction) is not None:
                attempt += 1
                if attempt >= budget:
                    logger.warning(f"Net of set {i} still fails the corridor check after {attempt} draws")
                    break
                nets[i] = draw_nets(instance, seed + attempt, constant)[i]
    union = sorted({p for net in nets for p in net})
    lines = pair_lines(union)
    logger.info(f"{len(lines)} candidate lines from a net of {len(union)} points")
    return lines

