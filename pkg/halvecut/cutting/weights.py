from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from halvecut.core.errors import CuttingError
from halvecut.geom import Line, as_rational
from halvecut.geom.primitives import ONE, ZERO


@dataclass(frozen=True)
class WeightedLineSet:
    """Lines with non-negative rational weights. Repeated lines have their weights merged."""

    entries: tuple[tuple[Line, Fraction], ...]

    def __post_init__(self) -> None:
        merged: dict[Line, Fraction] = {}
        for line, weight in self.entries:
            w = as_rational(weight)
            if w < 0:
                raise CuttingError(f"Negative weight {w} for {line}")
            merged[line] = merged.get(line, ZERO) + w
        object.__setattr__(self, "entries", tuple(merged.items()))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Line, object]]) -> WeightedLineSet:
        return cls(tuple((line, as_rational(w)) for line, w in pairs))

    @classmethod
    def uniform(cls, lines: Iterable[Line], weight: object = ONE) -> WeightedLineSet:
        w = as_rational(weight)
        return cls(tuple((line, w) for line in lines))

    @cached_property
    def _weights(self) -> dict[Line, Fraction]:
        return dict(self.entries)

    @cached_property
    def total_weight(self) -> Fraction:
        return sum((w for _, w in self.entries), ZERO)

    @property
    def lines(self) -> list[Line]:
        return [line for line, _ in self.entries]

    def positive(self) -> list[Line]:
        return [line for line, w in self.entries if w > 0]

    def weight(self, line: Line) -> Fraction:
        return self._weights.get(line, ZERO)

    def items(self) -> Iterator[tuple[Line, Fraction]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, line: object) -> bool:
        return line in self._weights
