"""Instance and result documents. Every rational is stored as an integer pair so nothing on
disk is ever a float."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from halvecut.core.errors import HalvecutError, InstanceError
from halvecut.core.instance import Instance
from halvecut.geom import Line, Point

logger = logging.getLogger(__name__)

INSTANCE_KEYS = {"sets", "meta"}
SET_KEYS = {"points", "fraction"}
META_KEYS = {"seed", "name"}
RESULT_KEYS = {"lines", "guards", "stats", "shear", "valid"}


@dataclass(frozen=True)
class InstanceFile:
    instance: Instance
    meta: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ResultFile:
    lines: Optional[tuple[Line, ...]] = None
    guards: Optional[tuple[Point, ...]] = None
    stats: dict[str, Any] = field(default_factory=dict)
    shear: Fraction = Fraction(0)
    valid: bool = False

    @property
    def kind(self) -> str:
        return "guards" if self.guards is not None else "lines"


# --- decoding ---

def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_rational(value: Any, where: str) -> Fraction:
    """An integer or an [num, den] pair."""
    if _is_int(value):
        return Fraction(value)
    if isinstance(value, list) and len(value) == 2 and all(_is_int(v) for v in value):
        if value[1] == 0:
            raise InstanceError(f"{where}: zero denominator")
        return Fraction(value[0], value[1])
    raise InstanceError(f"{where}: expected an integer or [num, den], got {value!r}")


def parse_point(value: Any, where: str) -> Point:
    if isinstance(value, list) and all(_is_int(v) for v in value):
        if len(value) == 2:
            return Point(value[0], value[1])
        if len(value) == 4:
            return Point(parse_rational(value[0:2], where), parse_rational(value[2:4], where))
    raise InstanceError(f"{where}: expected [x, y] or [x_num, x_den, y_num, y_den], got {value!r}")


def parse_line(value: Any, where: str) -> Line:
    if not isinstance(value, list) or len(value) != 3:
        raise InstanceError(f"{where}: expected [a, b, c], got {value!r}")
    a, b, c = (parse_rational(v, where) for v in value)
    try:
        return Line(a, b, c)
    except HalvecutError as e:
        raise InstanceError(f"{where}: {e}") from e


def _require_object(value: Any, allowed: set[str], where: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise InstanceError(f"{where}: expected an object")
    unknown = sorted(set(value) - allowed)
    if unknown:
        raise InstanceError(f"{where}: unknown keys {', '.join(unknown)}")
    return value


def parse_instance(data: Any) -> InstanceFile:
    data = _require_object(data, INSTANCE_KEYS, "instance")
    raw_sets = data.get("sets")
    if not isinstance(raw_sets, list) or not raw_sets:
        raise InstanceError("instance: 'sets' must be a nonempty list")
    sets = []
    for i, raw in enumerate(raw_sets):
        raw = _require_object(raw, SET_KEYS, f"sets[{i}]")
        if "points" not in raw or "fraction" not in raw:
            raise InstanceError(f"sets[{i}]: 'points' and 'fraction' are required")
        if not isinstance(raw["points"], list):
            raise InstanceError(f"sets[{i}].points: expected a list")
        points = [parse_point(p, f"sets[{i}].points[{j}]") for j, p in enumerate(raw["points"])]
        sets.append((points, parse_rational(raw["fraction"], f"sets[{i}].fraction")))
    meta = dict(_require_object(data.get("meta", {}), META_KEYS, "meta"))
    return InstanceFile(Instance.from_sets(sets), meta)


def parse_lines(data: Any) -> tuple[Line, ...]:
    """A bare line list or an object with a 'lines' key, as accepted by `cut --lines`."""
    if isinstance(data, dict):
        data = data.get("lines")
    if not isinstance(data, list):
        raise InstanceError("lines: expected a list of [a, b, c]")
    return tuple(parse_line(v, f"lines[{i}]") for i, v in enumerate(data))


def parse_result(data: Any) -> ResultFile:
    data = _require_object(data, RESULT_KEYS, "result")
    if ("lines" in data) == ("guards" in data):
        raise InstanceError("result: exactly one of 'lines' and 'guards' is required")
    if not isinstance(data.get("valid", False), bool):
        raise InstanceError("result: 'valid' must be a boolean")
    stats = data.get("stats", {})
    if not isinstance(stats, dict):
        raise InstanceError("result: 'stats' must be an object")
    shear = parse_rational(data.get("shear", 0), "result.shear")
    if "lines" in data:
        return ResultFile(lines=parse_lines(data["lines"]), stats=stats, shear=shear, valid=data.get("valid", False))
    if not isinstance(data["guards"], list):
        raise InstanceError("result.guards: expected a list")
    guards = tuple(parse_point(g, f"guards[{i}]") for i, g in enumerate(data["guards"]))
    return ResultFile(guards=guards, stats=stats, shear=shear, valid=data.get("valid", False))


def read_json(path: Path) -> Any:
    """JSON syntax errors come back as InstanceError naming the file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceError(f"Cannot read {path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def load_instance(path: Path) -> InstanceFile:
    return parse_instance(read_json(path))


def load_result(path: Path) -> ResultFile:
    return parse_result(read_json(path))


# --- encoding ---

def encode_rational(value: Fraction) -> list[int]:
    value = Fraction(value)
    return [value.numerator, value.denominator]


def encode_point(p: Point) -> list[int]:
    if p.x.denominator == 1 and p.y.denominator == 1:
        return [p.x.numerator, p.y.numerator]
    return encode_rational(p.x) + encode_rational(p.y)


def encode_line(line: Line) -> list[list[int]]:
    return [encode_rational(v) for v in (line.a, line.b, line.c)]


def encode_value(value: Any) -> Any:
    """Stats values: Fractions become pairs, dataclasses and tuples become objects and lists."""
    if isinstance(value, Fraction):
        return encode_rational(value)
    if isinstance(value, Point):
        return encode_point(value)
    if isinstance(value, Line):
        return encode_line(value)
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return {k: encode_value(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return value


def dump_instance(instance: Instance, meta: Optional[dict[str, Any]] = None) -> dict[str, Any]:
    data: dict[str, Any] = {
        "sets": [
            {"points": [encode_point(p) for p in s.points], "fraction": encode_rational(s.fraction)}
            for s in instance.sets
        ]
    }
    if meta:
        data["meta"] = {k: v for k, v in meta.items() if k in META_KEYS}
    return data


def dump_result(
    *,
    lines: Optional[Sequence[Line]] = None,
    guards: Optional[Sequence[Point]] = None,
    stats: Any = None,
    shear: Fraction = Fraction(0),
    valid: bool,
) -> dict[str, Any]:
    data: dict[str, Any] = {"stats": encode_value(stats) if stats is not None else {}, "shear": encode_rational(shear), "valid": valid}
    if guards is not None:
        data["guards"] = [encode_point(g) for g in guards]
    else:
        data["lines"] = [encode_line(line) for line in lines or ()]
    return data


def to_text(data: Any) -> str:
    """Stable rendering: same data, same bytes."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_json(path: Path, data: Any) -> None:
    Path(path).write_text(to_text(data), encoding="utf-8")
    logger.info(f"Wrote {path}")
