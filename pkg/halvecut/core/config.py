import logging
import os
from fractions import Fraction
from typing import Optional

logger = logging.getLogger(__name__)

# Helper functions for parsing environment variables
def _get_env_var(var_name: str, default: Optional[str] = None) -> Optional[str]:
    return os.getenv(var_name, default)

def _get_env_var_bool(var_name: str, default_bool: bool = False) -> bool:
    val_str = os.getenv(var_name)
    if val_str is None:
        return default_bool
    val_lower = val_str.strip().lower()
    if val_lower in ("1", "true", "yes", "on"):
        return True
    if val_lower in ("0", "false", "no", "off"):
        return False
    logger.warning(
        f"Invalid boolean value for environment variable {var_name}: '{val_str}'. "
        f"Using default: {default_bool}."
    )
    return default_bool

def _get_env_var_int(var_name: str, default_int: int, minimum: Optional[int] = None) -> int:
    val_str = os.getenv(var_name)
    if val_str is None or not val_str.strip():
        return default_int
    try:
        value = int(val_str.strip())
    except ValueError:
        logger.warning(
            f"Invalid integer value for environment variable {var_name}: '{val_str}'. "
            f"Using default: {default_int}."
        )
        return default_int
    if minimum is not None and value < minimum:
        logger.warning(
            f"Value {value} for environment variable {var_name} is below {minimum}. "
            f"Using default: {default_int}."
        )
        return default_int
    return value

def _get_env_var_fraction(var_name: str, default_fraction: Fraction) -> Fraction:
    """Reads a rational such as '6/5' or '2'. Floats are rejected to keep settings exact."""
    val_str = os.getenv(var_name)
    if val_str is None or not val_str.strip():
        return default_fraction
    raw = val_str.strip()
    try:
        if "." in raw or "e" in raw.lower():
            raise ValueError(raw)
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        logger.warning(
            f"Invalid rational value for environment variable {var_name}: '{val_str}'. "
            f"Using default: {default_fraction}."
        )
        return default_fraction


# --- Constants for Environment Variable Names ---
SEED_ENV_VAR_NAME: str = "HALVECUT_SEED"
NET_CONSTANT_C_ENV_VAR_NAME: str = "HALVECUT_NET_CONSTANT_C"
NET_SAMPLE_CONSTANT_ENV_VAR_NAME: str = "HALVECUT_NET_SAMPLE_CONSTANT"
NET_DIMENSION_CONSTANT_ENV_VAR_NAME: str = "HALVECUT_NET_DIMENSION_CONSTANT"
MAX_RETRIES_ENV_VAR_NAME: str = "HALVECUT_MAX_RETRIES"
LP_ITERATION_FACTOR_ENV_VAR_NAME: str = "HALVECUT_LP_ITERATION_FACTOR"
GUARD_BUDGET_CONSTANT_ENV_VAR_NAME: str = "HALVECUT_GUARD_BUDGET_CONSTANT"
CHAINED_DAG_ENV_VAR_NAME: str = "HALVECUT_CHAINED_DAG"
CALIBRATION_FILE_ENV_VAR_NAME: str = "HALVECUT_CALIBRATION_FILE"
SVG_MARGIN_ENV_VAR_NAME: str = "HALVECUT_SVG_MARGIN"
LOG_LEVEL_ENV_VAR_NAME: str = "LOG_LEVEL"

# --- Default Fallback Values for Configuration ---
DEFAULT_SEED: int = 0
DEFAULT_NET_CONSTANT_C: int = 2  # c in the oversampled net size
DEFAULT_NET_SAMPLE_CONSTANT: int = 4  # C_net
DEFAULT_NET_DIMENSION_CONSTANT: int = 8  # D
DEFAULT_MAX_RETRIES: int = 20
DEFAULT_LP_ITERATION_FACTOR: int = 50
DEFAULT_GUARD_BUDGET_CONSTANT: int = 8  # C_g
DEFAULT_CALIBRATION_FILE: str = "calibration.json"
DEFAULT_SVG_MARGIN: Fraction = Fraction(6, 5)
DEFAULT_LOG_LEVEL: str = "INFO"

# NOTE: .env loading happens in halvecut.core.bootstrap, before this module is imported.

# --- Configuration Variable Initialization using Helpers ---
SEED: int = _get_env_var_int(SEED_ENV_VAR_NAME, DEFAULT_SEED)

# Sampling and cutting constants
NET_CONSTANT_C: int = _get_env_var_int(NET_CONSTANT_C_ENV_VAR_NAME, DEFAULT_NET_CONSTANT_C, minimum=1)
NET_SAMPLE_CONSTANT: int = _get_env_var_int(
    NET_SAMPLE_CONSTANT_ENV_VAR_NAME, DEFAULT_NET_SAMPLE_CONSTANT, minimum=1
)
NET_DIMENSION_CONSTANT: int = _get_env_var_int(
    NET_DIMENSION_CONSTANT_ENV_VAR_NAME, DEFAULT_NET_DIMENSION_CONSTANT, minimum=1
)
MAX_RETRIES: int = _get_env_var_int(MAX_RETRIES_ENV_VAR_NAME, DEFAULT_MAX_RETRIES, minimum=1)

# Round-and-cut
LP_ITERATION_FACTOR: int = _get_env_var_int(
    LP_ITERATION_FACTOR_ENV_VAR_NAME, DEFAULT_LP_ITERATION_FACTOR, minimum=1
)
GUARD_BUDGET_CONSTANT: int = _get_env_var_int(
    GUARD_BUDGET_CONSTANT_ENV_VAR_NAME, DEFAULT_GUARD_BUDGET_CONSTANT, minimum=1
)
CHAINED_DAG: bool = _get_env_var_bool(CHAINED_DAG_ENV_VAR_NAME, True)

# Files and output
CALIBRATION_FILE: str = _get_env_var(CALIBRATION_FILE_ENV_VAR_NAME, DEFAULT_CALIBRATION_FILE)
SVG_MARGIN: Fraction = _get_env_var_fraction(SVG_MARGIN_ENV_VAR_NAME, DEFAULT_SVG_MARGIN)
if SVG_MARGIN < 1:
    logger.warning(
        f"{SVG_MARGIN_ENV_VAR_NAME} must be at least 1, got {SVG_MARGIN}. Using default: {DEFAULT_SVG_MARGIN}."
    )
    SVG_MARGIN = DEFAULT_SVG_MARGIN

_raw_log_level = (_get_env_var(LOG_LEVEL_ENV_VAR_NAME, DEFAULT_LOG_LEVEL) or DEFAULT_LOG_LEVEL).upper()
_valid_log_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
if _raw_log_level in _valid_log_levels:
    LOG_LEVEL: str = _raw_log_level
else:
    logger.warning(
        f"Invalid value for environment variable {LOG_LEVEL_ENV_VAR_NAME}: '{_raw_log_level}'. "
        f"Using default: '{DEFAULT_LOG_LEVEL}'."
    )
    LOG_LEVEL: str = DEFAULT_LOG_LEVEL
