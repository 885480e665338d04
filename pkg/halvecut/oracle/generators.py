from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from halvecut.core.errors import InstanceError
from halvecut.geom import Point
from halvecut.geom.primitives import ONE

CIRCLE_DENOMINATOR = 10**6


class GeneratorKind(str, Enum):
    GRID = "grid"
    CONVEX_POSITION = "convex"
    PARABOLA = "parabola"
    UNIFORM_RANDOM = "random"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    n: int
    seed: int = 0
    box: int = 100

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GeneratorKind(self.kind))
        if self.n < 1:
            raise InstanceError(f"A generated instance needs n >= 1, got {self.n}")
        if self.box < 1:
            raise InstanceError(f"Bounding box must be positive, got {self.box}")
        if self.kind is GeneratorKind.UNIFORM_RANDOM and self.n > (2 * self.box + 1) ** 2:
            raise InstanceError(f"Cannot place {self.n} distinct integer points in a box of {self.box}")


def _grid(n: int) -> list[Point]:
    cols = isqrt(n - 1) + 1
    return [Point(i % cols, i // cols) for i in range(n)]


def _parabola(n: int) -> list[Point]:
    return [Point(i, i * i) for i in range(1, n + 1)]


def _convex_position(n: int, seed: int, radius: int) -> list[Point]:
    """Exact rational points on a circle via x = (1 - t^2) / (1 + t^2), y = 2t / (1 + t^2)."""
    rng = random.Random(seed)
    offset = rng.uniform(0.1, 0.9)
    points = []
    for i in range(n):
        theta = -math.pi + 2 * math.pi * (i + offset) / n
        t = Fraction(math.tan(theta / 2)).limit_denominator(CIRCLE_DENOMINATOR)
        scale = radius / (ONE + t * t)
        points.append(Point((ONE - t * t) * scale, 2 * t * scale))
    return points


def _uniform_random(n: int, seed: int, box: int) -> list[Point]:
    rng = random.Random(seed)
    chosen: dict[Point, None] = {}
    while len(chosen) < n:
        chosen[Point(rng.randint(-box, box), rng.randint(-box, box))] = None
    return list(chosen)


def gen_instance(spec: GeneratorSpec) -> list[Point]:
    if spec.kind is GeneratorKind.GRID:
        return _grid(spec.n)
    if spec.kind is GeneratorKind.PARABOLA:
        return _parabola(spec.n)
    if spec.kind is GeneratorKind.CONVEX_POSITION:
        return _convex_position(spec.n, spec.seed, spec.box)
    return _uniform_random(spec.n, spec.seed, spec.box)
