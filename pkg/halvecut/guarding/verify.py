from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from halvecut.core.instance import Instance
from halvecut.geom import Point, Polygon, Shear

from .trapdag import find_bad_polygon


@dataclass(frozen=True)
class GuardingReport:
    valid: bool
    witness: Optional[tuple[int, Polygon]] = None  # (set index, unguarded heavy polygon), original coordinates


def verify_guarding(instance: Instance, guards: Iterable[Point], seed: int = 0) -> GuardingReport:
    """Valid when no set has a guard-free closed convex polygon holding ceil(fr_i * m_i) of its
    points. Works in sheared coordinates so the trapezoid DAG sees x-distinct points."""
    shear = Shear.for_points(instance.all_points, seed)
    sheared_guards = [shear.apply_point(g) for g in guards]
    for i, point_set in enumerate(instance.sets):
        points = [shear.apply_point(p) for p in point_set.points]
        polygon = find_bad_polygon(points, point_set.guard_threshold, sheared_guards)
        if polygon is not None:
            original = Polygon(tuple(shear.invert_point(v) for v in polygon.vertices))
            return GuardingReport(False, (i, original))
    return GuardingReport(True)
