from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Mapping, Optional, Union

from halvecut.core.errors import GeometryError
from halvecut.geom import Line, Polygon, line_meets_halfplanes
from halvecut.geom.primitives import ZERO

from .dcel import Arrangement, FaceId, OpenEdge, OpenFace
from .decompose import Trapezoid

if TYPE_CHECKING:
    from halvecut.core.instance import Instance

WeightMap = Mapping[Line, Fraction]


@dataclass(frozen=True)
class FaceComplexityProfile:
    c: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def __getitem__(self, i: int) -> int:
        return self.c[i]


def face_counts(arrangement: Arrangement, instance: Instance) -> dict[FaceId, list[int]]:
    """Per-set point counts of every face (of any dimension) holding at least one point."""
    counts: dict[FaceId, list[int]] = {}
    for p, owners in instance.membership().items():
        row = counts.setdefault(arrangement.locate(p), [0] * instance.k)
        for i in owners:
            row[i] += 1
    return dict(sorted(counts.items()))


def complexity_profile(arrangement: Arrangement) -> FaceComplexityProfile:
    return FaceComplexityProfile(
        tuple(sorted((face.complexity for face in arrangement.faces), reverse=True))
    )


def _polygon_crossed(polygon: Polygon, line: Line, closed: bool) -> bool:
    sides = [line.side(v) for v in polygon.vertices]
    if closed:
        return min(sides) <= 0 <= max(sides)
    return min(sides) < 0 < max(sides)


def crossing_weight(
    region: Union[FaceId, Trapezoid, Polygon, OpenFace, OpenEdge],
    weights: WeightMap,
    arrangement: Optional[Arrangement] = None,
    *,
    closed: bool = True,
) -> Fraction:
    """Total weight of the lines meeting the region.

    Face ids are relatively open: a line meets an edge only by crossing it and never meets a
    face it bounds. Trapezoids and polygons are closed unless closed=False.
    """
    test: Callable[[Line], bool]
    if isinstance(region, FaceId):
        if arrangement is None:
            raise GeometryError("A face id needs its arrangement")
        test = arrangement.region(region).crosses
    elif isinstance(region, Trapezoid):
        planes = region.halfplanes(closed)
        test = lambda line: line_meets_halfplanes(line, planes)  # noqa: E731
    elif isinstance(region, Polygon):
        test = lambda line: _polygon_crossed(region, line, closed)  # noqa: E731
    else:
        test = region.crosses
    return sum((w for line, w in weights.items() if w and test(line)), ZERO)


def zone_weights(arrangement: Arrangement, weights: WeightMap) -> dict[int, Fraction]:
    """Crossing weight of every 2-face, walking each weighted line through the arrangement.
    Faces no line crosses are absent."""
    totals: dict[int, Fraction] = defaultdict(lambda: ZERO)
    for line, w in weights.items():
        if not w:
            continue
        for face, _, _ in arrangement.zone(line):
            totals[face] += w
    return dict(totals)
