"""Exhaustive references for desk-sized inputs."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from halvecut.core.instance import Instance
from halvecut.geom import Line, Point, Polygon, convex_hull
from halvecut.geom.primitives import ONE, orient

logger = logging.getLogger(__name__)

ROTATION_HALVINGS = 64


@dataclass(frozen=True)
class NotFoundWithin:
    max_size: int


def _signature(line: Line, points: Sequence[Point]) -> tuple[int, ...]:
    return tuple(line.side(p) for p in points)


def _rotated(p: Point, q: Point, points: Sequence[Point], turn: int) -> Optional[Line]:
    """The line through p and q turned slightly about their midpoint. Points off the pair line
    keep their side; points on it split around the midpoint."""
    mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    d = q - mid
    off = [r for r in points if orient(p, q, r) != 0]
    eta = ONE
    for _ in range(ROTATION_HALVINGS):
        tip = q + Point(-d.y, d.x).scaled(eta * turn)
        if all(orient(mid, tip, r) == orient(p, q, r) for r in off):
            return Line.through(mid, tip)
        eta /= 2
    return None


def canonical_lines(points: Iterable[Point]) -> list[Line]:
    """Lines realizing every combinatorially distinct way one line can cut the points: every
    pair line, shifted to either side and turned either way about the pair's midpoint.
    Deduplicated by sign vector."""
    pts = sorted(set(points))
    found: dict[tuple[int, ...], Line] = {}
    for p, q in combinations(pts, 2):
        base = Line.through(p, q)
        off = [abs(base.value(r)) for r in pts if not base.contains(r)]
        shift = min(off) / 2 if off else ONE
        variants = [base, Line(base.a, base.b, base.c + shift), Line(base.a, base.b, base.c - shift)]
        for turn in (1, -1):
            rotated = _rotated(p, q, pts, turn)
            if rotated is not None:
                variants.append(rotated)
        for line in variants:
            found.setdefault(_signature(line, pts), line)
    return list(found.values())


def _is_halving(instance: Instance, signatures: Sequence[tuple[int, ...]], points: Sequence[Point], owners) -> bool:
    counts: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0] * instance.k)
    for index, p in enumerate(points):
        key = tuple(sig[index] for sig in signatures)
        row = counts[key]
        for i in owners[p]:
            row[i] += 1
            if row[i] > instance.sets[i].limit:
                return False
    return True


def brute_optimal_halving(
    instance: Instance, max_size: int, lines: Optional[Sequence[Line]] = None
) -> Union[tuple[int, tuple[Line, ...]], NotFoundWithin]:
    """Smallest subset of ``lines`` (canonical lines by default) with no overloaded face."""
    points = instance.all_points
    owners = instance.membership()
    pool = list(lines) if lines is not None else canonical_lines(points)
    signatures = [_signature(line, points) for line in pool]
    if _is_halving(instance, [], points, owners):
        return 0, ()
    for size in range(1, max_size + 1):
        for combo in combinations(range(len(pool)), size):
            if _is_halving(instance, [signatures[i] for i in combo], points, owners):
                return size, tuple(pool[i] for i in combo)
    logger.debug(f"No halving set of at most {max_size} among {len(pool)} lines")
    return NotFoundWithin(max_size)


def brute_max_empty_convex(points: Iterable[Point], guards: Iterable[Point] = ()) -> tuple[int, Optional[Polygon]]:
    """max |P ∩ CH(S)| over nonempty S ⊆ P whose closed hull avoids every guard."""
    pts = sorted(set(points))
    guards = list(guards)
    best: tuple[int, Optional[Polygon]] = (0, None)
    for size in range(1, len(pts) + 1):
        for subset in combinations(pts, size):
            hull = convex_hull(subset)
            if any(hull.contains(w) for w in guards):
                continue
            count = sum(1 for p in pts if hull.contains(p))
            if count > best[0]:
                best = (count, hull)
    return best
