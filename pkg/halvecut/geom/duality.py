from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from halvecut.core.errors import GeometryError, NoDualError
from halvecut.geom.primitives import Line, Point, as_rational

logger = logging.getLogger(__name__)

SHEAR_DRAWS = 64


def dual_point(p: Point) -> Line:
    """The line y = p.x * X - p.y."""
    return Line.from_slope(p.x, -p.y)


def dual_line(line: Line) -> Point:
    """The point (slope, -intercept) of a non-vertical line."""
    if line.is_vertical:
        raise NoDualError(f"Vertical line {line} has no dual point")
    return Point(line.slope, -line.intercept)


@dataclass(frozen=True)
class Shear:
    """x' = x + q*y, y' = y. Makes vertical lines slanted and x-coordinates distinct."""

    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_rational(self.q))

    @classmethod
    def identity(cls) -> Shear:
        return cls(Fraction(0))

    @classmethod
    def for_points(cls, points: Iterable[Point], seed: int) -> Shear:
        """Draws q from a seeded RNG until the given points get pairwise distinct x."""
        distinct = sorted(set(points))
        rng = random.Random(seed)
        for _ in range(SHEAR_DRAWS):
            q = Fraction(rng.randint(1, 9_999), rng.randint(10_007, 99_991))
            candidate = cls(q)
            xs = {candidate.apply_point(p).x for p in distinct}
            if len(xs) == len(distinct):
                return candidate
        raise GeometryError(f"Could not find an x-separating shear in {SHEAR_DRAWS} draws")

    def apply_point(self, p: Point) -> Point:
        return Point(p.x + self.q * p.y, p.y)

    def invert_point(self, p: Point) -> Point:
        return Point(p.x - self.q * p.y, p.y)

    def apply_line(self, line: Line) -> Line:
        return Line(line.a, line.b - line.a * self.q, line.c)

    def invert_line(self, line: Line) -> Line:
        return Line(line.a, line.b + line.a * self.q, line.c)
