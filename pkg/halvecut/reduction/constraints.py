from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable

from halvecut.arrangement import OpenEdge, OpenFace
from halvecut.geom import Line, Point


@dataclass(frozen=True)
class ViolatedConstraint:
    """A bad open region of a rounding attempt: some set holds more than its limit inside it,
    and the candidate lines crossing it carry fractional value below 1/2."""

    region: OpenFace | OpenEdge
    signs: tuple[int, ...]  # side vector over cutting_lines
    cutting_lines: tuple[Line, ...]
    lines_crossing: tuple[Line, ...]
    witness_set_index: int
    witness_count: int
    fractional_value: Fraction
    witness_points: tuple[Point, ...] = ()

    @property
    def dim(self) -> int:
        return max(0, 2 - self.signs.count(0))

    @property
    def key(self) -> frozenset[Line]:
        return frozenset(self.lines_crossing)

    def with_candidates(self, candidates: Iterable[Line]) -> ViolatedConstraint:
        crossing = tuple(sorted(line for line in candidates if self.region.crosses(line)))
        return replace(self, lines_crossing=crossing)
