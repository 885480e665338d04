from fractions import Fraction
from pathlib import Path

import pytest

from halvecut.core import config
from halvecut.core.instance import Instance, single_set
from halvecut.geom import Point
from halvecut.oracle import calibrate_constants, load_calibration

FALLBACK_TRIALS = 5


@pytest.fixture
def grid16() -> Instance:
    return single_set([Point(x, y) for x in range(4) for y in range(4)], Fraction(1, 2))


@pytest.fixture
def square() -> list[Point]:
    return [Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2)]


@pytest.fixture
def triangle() -> list[Point]:
    return [Point(0, 0), Point(4, 1), Point(1, 3)]


@pytest.fixture(scope="session")
def complexity_constant() -> float:
    """The stored calibration when present, otherwise a quick fit."""
    report = load_calibration(Path(config.CALIBRATION_FILE))
    if report is None:
        report = calibrate_constants(trials=FALLBACK_TRIALS, seed=0, arrangement_lines=32, cutting_lines=12,
                                     eps_values=(Fraction(1, 2),))
    return report.complexity_constant
