from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Union

from halvecut.geom import Point, Segment, segment_intersection

logger = logging.getLogger(__name__)

ORIGINAL = "original"
Provenance = Union[str, tuple[tuple[Point, Point], tuple[Point, Point]]]


@dataclass(frozen=True)
class GuardCandidates:
    points: tuple[Point, ...]  # canonical order
    provenance: Mapping[Point, Provenance] = field(hash=False)

    def __len__(self) -> int:
        return len(self.points)


def candidate_points(points: Iterable[Point]) -> GuardCandidates:
    """The points themselves plus every proper crossing of two segments spanned by them."""
    base = sorted(set(points))
    provenance: dict[Point, Provenance] = {p: ORIGINAL for p in base}
    segments = [Segment(p, q) for p, q in combinations(base, 2)]
    for s1, s2 in combinations(segments, 2):
        hit = segment_intersection(s1, s2)
        if hit is not None and hit not in provenance:
            provenance[hit] = ((s1.p, s1.q), (s2.p, s2.q))
    logger.debug(f"{len(provenance)} guard candidates from {len(base)} points")
    return GuardCandidates(tuple(sorted(provenance)), provenance)
