"""Corridors of line sets: the closed region between the lower and upper envelopes of a set
of non-vertical lines. Every query is answered on the convex hull of the dual points."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from halvecut.core.errors import CorridorError, NoDualError
from halvecut.geom import Line, Point, Polygon, as_rational, convex_hull, dual_line, dual_point
from halvecut.geom.primitives import ONE, ZERO, orient

logger = logging.getLogger(__name__)


def combine(lines: Sequence[Line], coeffs: Sequence[object]) -> Line:
    """Convex combination of lines: slopes and intercepts averaged with the given weights."""
    if len(lines) != len(coeffs) or not lines:
        raise CorridorError(f"Got {len(lines)} lines and {len(coeffs)} coefficients")
    weights = [as_rational(c) for c in coeffs]
    if any(w < 0 for w in weights) or sum(weights, ZERO) != ONE:
        raise CorridorError(f"Coefficients {weights} are not a convex combination")
    if any(line.is_vertical for line in lines):
        raise CorridorError("Vertical lines cannot be combined")
    slope = sum((w * line.slope for w, line in zip(weights, lines)), ZERO)
    intercept = sum((w * line.intercept for w, line in zip(weights, lines)), ZERO)
    return Line.from_slope(slope, intercept)


@dataclass(frozen=True)
class Corridor:
    generators: tuple[Line, ...]

    def __post_init__(self) -> None:
        unique = tuple(dict.fromkeys(self.generators))
        if not unique:
            raise CorridorError("A corridor needs at least one generator")
        vertical = [g for g in unique if g.is_vertical]
        if vertical:
            raise CorridorError(f"Vertical generator {vertical[0]} has no dual point")
        object.__setattr__(self, "generators", unique)

    @cached_property
    def _by_dual(self) -> dict[Point, Line]:
        return {dual_line(g): g for g in self.generators}

    @cached_property
    def dual_hull(self) -> Polygon:
        return convex_hull(self._by_dual)

    def contains_point(self, p: Point) -> bool:
        """Closed membership: the dual line of p meets the dual hull."""
        dual = dual_point(p)
        sides = [dual.side(v) for v in self.dual_hull.vertices]
        return min(sides) <= 0 <= max(sides)

    def strictly_contains(self, p: Point) -> bool:
        """p lies strictly between the envelopes."""
        dual = dual_point(p)
        sides = [dual.side(v) for v in self.dual_hull.vertices]
        return min(sides) < 0 < max(sides)

    def contains_line(self, g: Line) -> bool:
        try:
            q = dual_line(g)
        except NoDualError as e:
            raise CorridorError(f"Vertical line {g} cannot lie in a corridor") from e
        return self.dual_hull.contains(q)

    def caratheodory_triple(self, g: Line) -> list[Line]:
        """At most three generators whose corridor already contains g.

        Fans the dual hull from its first vertex and locates dual(g) in one of the triangles;
        a vertex or an edge hit returns one or two generators.
        """
        if not self.contains_line(g):
            raise CorridorError(f"{g} does not lie in the corridor")
        q = dual_line(g)
        hull = self.dual_hull.vertices
        if q in self._by_dual:
            return [self._by_dual[q]]
        if len(hull) == 2:
            return [self._by_dual[v] for v in hull]
        apex = hull[0]
        for b, c in zip(hull[1:], hull[2:]):
            turns = (orient(apex, b, q), orient(b, c, q), orient(c, apex, q))
            if min(turns) < 0:
                continue
            triangle = (apex, b, c)
            # A zero turn puts q on the side opposite the missing corner.
            for skip, turn in zip((c, apex, b), turns):
                if turn == 0:
                    return [self._by_dual[v] for v in triangle if v != skip]
            return [self._by_dual[v] for v in triangle]
        raise CorridorError(f"Dual point of {g} not found in the hull fan")


def caratheodory_triple(corridor: Corridor, g: Line) -> list[Line]:
    return corridor.caratheodory_triple(g)


def contains_point(corridor: Corridor, p: Point) -> bool:
    return corridor.contains_point(p)


def contains_line(corridor: Corridor, g: Line) -> bool:
    return corridor.contains_line(g)
