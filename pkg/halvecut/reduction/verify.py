from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from halvecut.arrangement import FaceId, build_arrangement, face_counts
from halvecut.core.instance import Instance
from halvecut.geom import Line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalvingReport:
    valid: bool
    worst: Optional[tuple[FaceId, int, int]]  # (face, set index, count) with the largest load
    violations: int = 0


def verify_halving(instance: Instance, lines: Iterable[Line]) -> HalvingReport:
    """Checks every face of every dimension against every set's limit."""
    arrangement = build_arrangement(lines)
    worst: Optional[tuple[FaceId, int, int]] = None
    worst_load = Fraction(-1)
    violations = 0
    for fid, row in face_counts(arrangement, instance).items():
        for i, count in enumerate(row):
            point_set = instance.sets[i]
            if count > point_set.limit:
                violations += 1
            load = Fraction(count, point_set.size) / point_set.fraction
            if load > worst_load:
                worst, worst_load = (fid, i, count), load
    if violations:
        logger.debug(f"Halving check failed on {violations} (face, set) pairs; worst {worst}")
    return HalvingReport(violations == 0, worst, violations)
