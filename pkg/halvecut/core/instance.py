from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from halvecut.core.errors import InstanceError
from halvecut.geom import Point, Shear, as_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    fraction: Fraction

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def limit(self) -> Fraction:
        """fr_i * m_i: the largest count a cell may hold."""
        return self.fraction * len(self.points)

    @property
    def guard_threshold(self) -> int:
        """Smallest count that makes a convex region heavy: ceil(fr_i * m_i)."""
        return ceil(self.limit)


@dataclass(frozen=True)
class Instance:
    """k point sets P_i with fractions fr_i in (0, 1]. Points are deduplicated within a set;
    different sets may share points."""

    sets: tuple[PointSet, ...]

    @classmethod
    def from_sets(cls, sets: Iterable[tuple[Iterable[Point], object]]) -> Instance:
        built = []
        for index, (points, fraction) in enumerate(sets):
            try:
                fr = as_rational(fraction)
            except Exception as e:
                raise InstanceError(f"Set {index}: fraction {fraction!r} is not a rational") from e
            unique = tuple(dict.fromkeys(points))
            if not unique:
                raise InstanceError(f"Set {index} is empty")
            if not (0 < fr <= 1):
                raise InstanceError(f"Set {index}: fraction {fr} is outside (0, 1]")
            if fr * len(unique) < 1:
                # A single point already exceeds the limit, no line set can help.
                raise InstanceError(
                    f"Set {index}: fraction {fr} is below 1/{len(unique)}, the instance has no solution"
                )
            built.append(PointSet(unique, fr))
        if not built:
            raise InstanceError("An instance needs at least one point set")
        return cls(tuple(built))

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> list[int]:
        return [s.size for s in self.sets]

    @property
    def m(self) -> int:
        return sum(self.sizes)

    @property
    def fr(self) -> Fraction:
        return min(s.fraction for s in self.sets)

    @property
    def all_points(self) -> list[Point]:
        """Distinct points of all sets in canonical order."""
        return sorted({p for s in self.sets for p in s.points})

    def membership(self) -> dict[Point, list[int]]:
        """For every distinct point, the indices of the sets containing it."""
        owners: dict[Point, list[int]] = {}
        for index, point_set in enumerate(self.sets):
            for p in point_set.points:
                owners.setdefault(p, []).append(index)
        return owners

    def sheared(self, shear: Shear) -> Instance:
        return Instance(tuple(
            PointSet(tuple(shear.apply_point(p) for p in s.points), s.fraction) for s in self.sets
        ))


def single_set(points: Sequence[Point], fraction: object) -> Instance:
    return Instance.from_sets([(points, fraction)])
