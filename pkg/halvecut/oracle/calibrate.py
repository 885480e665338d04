from __future__ import annotations

import json
import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from halvecut.arrangement import build_arrangement, complexity_profile
from halvecut.cutting import CuttingParams, WeightedLineSet, simple_weak_cutting, weak_cutting
from halvecut.geom import Line

logger = logging.getLogger(__name__)

CALIBRATION_VERSION = 1
DEFAULT_EPS_VALUES = (Fraction(1, 5), Fraction(1, 10), Fraction(1, 20))


@dataclass(frozen=True)
class CalibrationReport:
    version: int
    seed: int
    trials: int
    arrangement_lines: int
    complexity_constant: float
    cutting_lines: int
    # eps -> |R| * eps^2 (exact, as a string), per construction
    weak_cutting_ratio: dict[str, str] = field(default_factory=dict)
    simple_cutting_ratio: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"


def random_lines(n: int, rng: random.Random) -> list[Line]:
    """n distinct non-vertical lines with small rational slopes and intercepts."""
    lines: dict[Line, None] = {}
    while len(lines) < n:
        slope = Fraction(rng.randint(-1000, 1000), rng.randint(1, 97))
        intercept = Fraction(rng.randint(-1000, 1000), rng.randint(1, 97))
        lines[Line.from_slope(slope, intercept)] = None
    return list(lines)


def complexity_bound(nu: int, count: int) -> np.ndarray:
    """nu^(2/3) / i^(1/3) + nu / i + 1 for i = 1..count."""
    i = np.arange(1, count + 1, dtype=float)
    return nu ** (2 / 3) / np.cbrt(i) + nu / i + 1


def fit_complexity_constant(profiles: Sequence[Sequence[int]], nu: int) -> float:
    worst = 0.0
    for profile in profiles:
        c = np.asarray(profile, dtype=float)
        worst = max(worst, float(np.max(c / complexity_bound(nu, len(c)))))
    return round(worst, 6)


def calibrate_constants(
    trials: int = 50,
    seed: int = 0,
    arrangement_lines: int = 64,
    cutting_lines: int = 50,
    eps_values: Sequence[Fraction] = DEFAULT_EPS_VALUES,
) -> CalibrationReport:
    rng = random.Random(seed)
    profiles = []
    for trial in range(trials):
        arrangement = build_arrangement(random_lines(arrangement_lines, rng))
        profiles.append(complexity_profile(arrangement).c)
        logger.debug(f"Calibration trial {trial + 1}/{trials}: largest face {profiles[-1][0]}")
    constant = fit_complexity_constant(profiles, arrangement_lines)

    weights = WeightedLineSet.uniform(random_lines(cutting_lines, rng))
    weak_ratio: dict[str, str] = {}
    simple_ratio: dict[str, str] = {}
    for eps in eps_values:
        weak = weak_cutting(weights, eps, CuttingParams(eps, seed=seed))
        simple = simple_weak_cutting(weights, eps, seed=seed)
        weak_ratio[str(eps)] = str(weak.size * eps * eps)
        simple_ratio[str(eps)] = str(simple.size * eps * eps)
        logger.info(f"eps={eps}: weak cutting {weak.size} lines, simple cutting {simple.size} lines")

    return CalibrationReport(
        version=CALIBRATION_VERSION,
        seed=seed,
        trials=trials,
        arrangement_lines=arrangement_lines,
        complexity_constant=constant,
        cutting_lines=cutting_lines,
        weak_cutting_ratio=weak_ratio,
        simple_cutting_ratio=simple_ratio,
    )


def save_report(report: CalibrationReport, path: Path) -> None:
    path = Path(path)
    path.write_text(report.to_json(), encoding="utf-8")
    logger.info(f"Calibration report written to {path}")


def load_calibration(path: Path) -> Optional[CalibrationReport]:
    """The stored report, or None if the file is missing or has another version."""
    path = Path(path)
    if not path.is_file():
        return None
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("version") != CALIBRATION_VERSION:
        logger.warning(f"Ignoring calibration file {path} with version {data.get('version')}")
        return None
    return CalibrationReport(**data)
