from .brute import NotFoundWithin, brute_max_empty_convex, brute_optimal_halving, canonical_lines
from .calibrate import (
    CALIBRATION_VERSION,
    CalibrationReport,
    calibrate_constants,
    complexity_bound,
    load_calibration,
    random_lines,
    save_report,
)
from .generators import GeneratorKind, GeneratorSpec, gen_instance

__all__ = [
    "CALIBRATION_VERSION",
    "CalibrationReport",
    "GeneratorKind",
    "GeneratorSpec",
    "NotFoundWithin",
    "brute_max_empty_convex",
    "brute_optimal_halving",
    "calibrate_constants",
    "canonical_lines",
    "complexity_bound",
    "gen_instance",
    "load_calibration",
    "random_lines",
    "save_report",
]
