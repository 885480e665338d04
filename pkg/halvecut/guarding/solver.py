"""Round-and-cut for the guarding problem. Variables are candidate guards; the separation
oracle greedily builds a guard set with the bad-polygon DP, either finishing or exposing a bad
polygon whose candidates carry less than 1/2."""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log2
from typing import Optional, Union

from halvecut.core import config
from halvecut.core.errors import SolverError
from halvecut.core.instance import Instance
from halvecut.geom import Point, Polygon, Shear
from halvecut.geom.primitives import ZERO
from halvecut.lp import solve_covering_lp

from .candidates import candidate_points
from .trapdag import find_bad_polygon
from .verify import verify_guarding

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
CUTS_PER_ROUND = 16
NET_CONSTRUCTION = "greedy-dp-oracle"


@dataclass(frozen=True)
class GuardingConfig:
    seed: int = field(default_factory=lambda: config.SEED)
    budget_constant: int = field(default_factory=lambda: config.GUARD_BUDGET_CONSTANT)
    lp_iteration_factor: int = field(default_factory=lambda: config.LP_ITERATION_FACTOR)
    cuts_per_round: int = CUTS_PER_ROUND


@dataclass(frozen=True)
class GuardStats:
    t: int = 0
    t_lower: int = 0
    dp_calls: int = 0
    constraints: int = 0
    lp_iterations: int = 0
    budget_failures: int = 0
    candidates: int = 0
    net_construction: str = NET_CONSTRUCTION
    shear: Fraction = ZERO


@dataclass(frozen=True)
class GuardSet:
    guards: tuple[Point, ...]
    stats: GuardStats = GuardStats()

    @property
    def size(self) -> int:
        return len(self.guards)


@dataclass(frozen=True)
class _BadPolygon:
    polygon: Polygon
    set_index: int
    covered: frozenset[int]  # candidate indices in the closed polygon
    value: Fraction


def guard_budget(t: int, m: int, constant: int) -> int:
    """ceil(C_g * t^2 * (1 + log2(m + 1)))."""
    return ceil(constant * t * t * (1 + log2(m + 1)))


class GuardingLoop:
    def __init__(self, instance: Instance, cfg: GuardingConfig):
        self.instance = instance
        self.config = cfg
        self.candidates = candidate_points(instance.all_points).points
        self._xs = [q.x for q in self.candidates]
        self.rows: list[frozenset[int]] = []
        self._seen: set[frozenset[int]] = set()
        self.dp_calls = 0
        self.lp_iterations = 0
        self.budget_failures = 0
        self.lp_lower = ZERO

    def _bad_polygon_of(self, index: int, guards: list[Point]) -> Optional[Polygon]:
        self.dp_calls += 1
        point_set = self.instance.sets[index]
        return find_bad_polygon(point_set.points, point_set.guard_threshold, guards)

    def _covered(self, polygon: Polygon) -> frozenset[int]:
        """Candidate indices in the closed polygon; candidates are sorted by x."""
        xs = [v.x for v in polygon.vertices]
        lo, hi = bisect_left(self._xs, min(xs)), bisect_right(self._xs, max(xs))
        return frozenset(i for i in range(lo, hi) if polygon.contains(self.candidates[i]))

    def _greedy(self, x: tuple[Fraction, ...], budget: Optional[int]) -> Union[list[Point], list[_BadPolygon], None]:
        """Guards picked by maximum x inside each bad polygon.

        A light bad polygon is recorded and still guarded so the pass can expose more of them;
        the pass returns the recorded polygons once it holds ``cuts_per_round`` of them, runs out
        of bad polygons or runs over the budget. Without light polygons, running over the budget
        returns None.
        """
        guards: list[Point] = []
        light: list[_BadPolygon] = []
        # A bad polygon stays bad until a guard lands in it.
        current = {i: self._bad_polygon_of(i, guards) for i in range(self.instance.k)}
        while (found := next(((i, pg) for i, pg in current.items() if pg is not None), None)) is not None:
            set_index, polygon = found
            covered = self._covered(polygon)
            value = sum((x[i] for i in covered), ZERO)
            if value < HALF:
                light.append(_BadPolygon(polygon, set_index, covered, value))
                if len(light) >= self.config.cuts_per_round:
                    return light
            pick = max(sorted(covered), key=lambda i: (x[i], -i))
            guard = self.candidates[pick]
            guards.append(guard)
            if budget is not None and len(guards) > budget:
                return light or None
            for i, pg in current.items():
                if pg is not None and pg.contains(guard):
                    current[i] = self._bad_polygon_of(i, guards)
        return light or guards

    def run(self, t: int) -> Optional[list[Point]]:
        """Guards for budget t, or None when the LP exceeds t or the greedy runs over B(t)."""
        budget = None if t >= self.instance.m else guard_budget(t, self.instance.m, self.config.budget_constant)
        cap = self.config.lp_iteration_factor * max(1, len(self.candidates))
        for _ in range(cap):
            self.lp_iterations += 1
            solution = solve_covering_lp(len(self.candidates), [sorted(r) for r in self.rows])
            self.lp_lower = max(self.lp_lower, solution.value)
            if solution.value > t:
                logger.debug(f"Guard LP optimum {solution.value} exceeds t={t}")
                return None
            outcome = self._greedy(solution.x, budget)
            if outcome is None:
                self.budget_failures += 1
                logger.info(f"Greedy guard set ran over the budget {budget} at t={t}")
                return None
            if outcome and isinstance(outcome[0], _BadPolygon):
                for bad in outcome:
                    if bad.covered in self._seen:
                        raise SolverError(f"Bad polygon for set {bad.set_index} repeated at value {bad.value}")
                    self._seen.add(bad.covered)
                    self.rows.append(bad.covered)
                logger.debug(
                    f"t={t}: {len(outcome)} light bad polygon(s), first of set {outcome[0].set_index} "
                    f"with {len(outcome[0].covered)} candidates at value {outcome[0].value}"
                )
                continue
            return outcome
        raise SolverError(f"Guarding round-and-cut at t={t} did not settle within {cap} LP iterations")


def solve_guarding(instance: Instance, cfg: Optional[GuardingConfig] = None) -> GuardSet:
    cfg = cfg if cfg is not None else GuardingConfig()
    shear = Shear.for_points(instance.all_points, cfg.seed)
    loop = GuardingLoop(instance.sheared(shear), cfg)
    m = instance.m

    t = 1
    while True:
        logger.info(f"Trying guard budget t={t} over {len(loop.candidates)} candidates")
        guards = loop.run(t)
        if guards is not None:
            break
        if t >= m:
            raise SolverError(f"No guard set found at t={t}")
        t = min(2 * t, m)

    result = tuple(shear.invert_point(g) for g in guards)
    report = verify_guarding(instance, result)
    if not report.valid:
        raise SolverError(f"Guard set failed verification: set {report.witness[0]} has an unguarded polygon")
    stats = GuardStats(
        t=t,
        t_lower=ceil(loop.lp_lower),
        dp_calls=loop.dp_calls,
        constraints=len(loop.rows),
        lp_iterations=loop.lp_iterations,
        budget_failures=loop.budget_failures,
        candidates=len(loop.candidates),
        shear=shear.q,
    )
    logger.info(f"Guarding solved with {len(result)} guards (t={t}, lower bound {stats.t_lower})")
    return GuardSet(result, stats)
