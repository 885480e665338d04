from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from halvecut.arrangement import Arrangement, FaceId, build_arrangement, zone_weights
from halvecut.geom import Line, as_rational
from halvecut.geom.primitives import ZERO

from .models import Cutting
from .weights import WeightedLineSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CuttingReport:
    valid: bool
    worst_face: Optional[FaceId]
    worst_weight: Fraction
    limit: Fraction


def verify_cutting(
    weights: WeightedLineSet,
    cutting: Union[Cutting, Iterable[Line]],
    eps: object,
    arrangement: Optional[Arrangement] = None,
) -> CuttingReport:
    """Checks that every open 2-face of the cutting's arrangement crosses at most eps of the
    total weight. A prebuilt arrangement of the cutting lines may be passed in."""
    lines = list(cutting.lines) if isinstance(cutting, Cutting) else list(cutting)
    limit = as_rational(eps) * weights.total_weight
    present = set(lines)
    if all(line in present for line in weights.positive()):
        return CuttingReport(True, None, ZERO, limit)

    arrangement = arrangement if arrangement is not None else build_arrangement(lines)
    loads = zone_weights(arrangement, weights)
    face, worst = max(loads.items(), key=lambda item: (item[1], -item[0]))
    report = CuttingReport(worst <= limit, FaceId(2, face), worst, limit)
    logger.debug(f"Cutting of {len(present)} lines: worst face {face} carries {worst} (limit {limit})")
    return report
