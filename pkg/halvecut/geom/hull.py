from __future__ import annotations

import logging
from typing import Iterable

from halvecut.core.errors import EmptyInputError, NotSeparableError
from halvecut.geom.primitives import Line, Point, Polygon, cross, polygons_intersect

logger = logging.getLogger(__name__)


def convex_hull(points: Iterable[Point]) -> Polygon:
    """Monotone chain hull. Collinear points are dropped from the vertex list; an all-collinear
    input yields its two extreme points."""
    pts = sorted(set(points))
    if not pts:
        raise EmptyInputError("convex_hull needs at least one point")
    if len(pts) <= 2:
        return Polygon(tuple(pts))

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-1] - lower[-2], p - lower[-2]) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-1] - upper[-2], p - upper[-2]) <= 0:
            upper.pop()
        upper.append(p)
    return Polygon(tuple(lower[:-1] + upper[:-1]))


def _separates(line: Line, first: Polygon, second: Polygon) -> bool:
    sides_a = [line.side(v) for v in first.vertices]
    sides_b = [line.side(v) for v in second.vertices]
    if max(sides_a) <= 0 and min(sides_b) >= 0:
        return True
    return min(sides_a) >= 0 and max(sides_b) <= 0


def cross_tangents(first: Polygon, second: Polygon) -> tuple[Line, Line]:
    """The two inner common tangents of strictly separated convex polygons.

    Each returned line keeps one polygon in a closed half-plane and the other polygon in the
    opposite one. Two single points give the line through them twice.
    """
    if polygons_intersect(first, second):
        raise NotSeparableError("Polygons are not strictly separable")
    found: dict[Line, None] = {}
    for a in first.vertices:
        for b in second.vertices:
            line = Line.through(a, b)
            if line not in found and _separates(line, first, second):
                found[line] = None
    tangents = list(found)
    if not tangents:
        raise NotSeparableError("No separating tangent found")
    if len(tangents) == 1:
        return tangents[0], tangents[0]
    if len(tangents) > 2:
        logger.debug(f"cross_tangents found {len(tangents)} separating lines through vertex pairs; keeping two")
    return tangents[0], tangents[1]
