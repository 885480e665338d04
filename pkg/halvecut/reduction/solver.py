"""Round-and-cut for the reduction problem: exponential search over the budget t, an exact
covering LP over the accumulated constraints, and weak-cutting rounding as separation oracle."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence, Union

from halvecut.core import config
from halvecut.core.errors import SolverError
from halvecut.core.instance import Instance
from halvecut.cutting import CuttingParams
from halvecut.geom import Line, Point, Shear
from halvecut.geom.primitives import ZERO
from halvecut.lp import solve_covering_lp

from .candidates import candidate_lines, pair_lines
from .cells import PointSignatures
from .constraints import ViolatedConstraint
from .program import Infeasible, lp_feasible
from .rounding import Rounded, rounding_eps, separate
from .verify import verify_halving

logger = logging.getLogger(__name__)

CUTS_PER_ROUND = 16
NAIVE_SEARCH_FACTOR = 3


@dataclass(frozen=True)
class ReductionConfig:
    seed: int = field(default_factory=lambda: config.SEED)
    net_constant_c: int = field(default_factory=lambda: config.NET_CONSTANT_C)
    net_sample_constant: int = field(default_factory=lambda: config.NET_SAMPLE_CONSTANT)
    max_retries: int = field(default_factory=lambda: config.MAX_RETRIES)
    lp_iteration_factor: int = field(default_factory=lambda: config.LP_ITERATION_FACTOR)
    verify_net: bool = False
    refine: bool = True
    cuts_per_round: int = CUTS_PER_ROUND


@dataclass(frozen=True)
class ReductionStats:
    t: int = 0
    t_lower: int = 0  # certified: no solution has fewer lines
    candidate_lower: int = 0  # largest LP optimum seen over the candidate family
    naive_bound: int = 0
    lp_iterations: int = 0
    lp_pivots: int = 0
    rounding_attempts: int = 0
    cutting_sizes: tuple[int, ...] = ()
    candidates: int = 0
    augmented: int = 0
    constraints: int = 0
    rounding_blowup: Optional[Fraction] = None
    shear: Fraction = ZERO


@dataclass(frozen=True)
class Solution:
    lines: tuple[Line, ...]
    stats: ReductionStats = ReductionStats()

    @property
    def size(self) -> int:
        return len(self.lines)


def naive_line_bound(instance: Instance) -> int:
    """Lines of the solution that cuts every set, sorted by x, into blocks of floor(fr_i * m_i)
    points with one line between consecutive blocks. Points need pairwise distinct x."""
    return sum(-(-s.size // floor(s.limit)) - 1 for s in instance.sets)


def certified_lower_bound(
    instance: Instance, constraints: Sequence[ViolatedConstraint], signatures: Optional[PointSignatures] = None
) -> Fraction:
    """A lower bound on the size of every solution, not only those built from candidates.

    Each constraint's witness points exceed their set's limit, so every solution has a line
    that is not constant on them. Sliding that line until it passes through two points of the
    instance only turns sides into 0, so some line through two instance points either splits
    the witnesses or contains one. The covering LP over those rows bounds the optimum.
    """
    groups = {tuple(sorted(c.witness_points)) for c in constraints if c.witness_points}
    if not groups:
        return ZERO
    signatures = signatures if signatures is not None else PointSignatures(instance)
    pool = pair_lines(instance.all_points)
    rows = []
    for points in sorted(groups):
        row = []
        for j, line in enumerate(pool):
            sides = signatures.sides(line, points)
            if 0 in sides or len(sides) > 1:
                row.append(j)
        rows.append(row)
    value = solve_covering_lp(len(pool), rows).value
    logger.debug(f"Certified lower bound {value} from {len(rows)} witness groups over {len(pool)} lines")
    return value


class RoundAndCut:
    """Constraint pool and counters shared by every budget tried on one (sheared) instance."""

    def __init__(self, instance: Instance, candidates: list[Line], cfg: ReductionConfig):
        self.instance = instance
        self.candidates = list(candidates)
        self.config = cfg
        self.constraints: list[ViolatedConstraint] = []
        self._keys: set[frozenset[Line]] = set()
        self.signatures = PointSignatures(instance)
        self.lp_iterations = 0
        self.lp_pivots = 0
        self.rounding_attempts = 0
        self.cutting_sizes: list[int] = []
        self.augmented = 0
        self.lp_lower = ZERO

    def _add(self, constraint: ViolatedConstraint) -> bool:
        if constraint.key in self._keys:
            logger.debug(f"Duplicate constraint for cell {constraint.signs} ignored")
            return False
        self._keys.add(constraint.key)
        self.constraints.append(constraint)
        return True

    def _augment(self, constraint: ViolatedConstraint) -> ViolatedConstraint:
        """Adds candidate lines crossing a bad region that no candidate crosses yet."""
        inside = sorted(constraint.witness_points)
        fresh: dict[Line, None] = {}
        if constraint.dim == 2:
            for p, q in zip(inside, inside[1:]):
                fresh[Line.through(p, q)] = None
        else:
            support = constraint.region.line
            off = next((q for q in self.instance.all_points if not support.contains(q)), None)
            for p in inside:
                other = off if off is not None else p + (Point(1, 0) if support.is_vertical else Point(0, 1))
                fresh[Line.through(p, other)] = None
        known = set(self.candidates)
        added = [line for line in fresh if line not in known]
        self.candidates.extend(added)
        self.augmented += len(added)
        logger.info(f"Bad cell {constraint.signs} is crossed by no candidate; added {len(added)} lines")
        self.constraints = [c.with_candidates(self.candidates) for c in self.constraints]
        self._keys = {c.key for c in self.constraints}
        return constraint.with_candidates(self.candidates)

    def run(self, t: int) -> Union[Rounded, Infeasible]:
        cap = self.config.lp_iteration_factor * max(1, len(self.candidates))
        for _ in range(cap):
            self.lp_iterations += 1
            result = lp_feasible(self.candidates, self.constraints, t)
            if isinstance(result, Infeasible):
                if result.lp_value is not None:
                    self.lp_lower = max(self.lp_lower, result.lp_value)
                return result
            self.lp_pivots += result.pivots
            self.lp_lower = max(self.lp_lower, result.value)

            params = CuttingParams(
                rounding_eps(result.value),
                net_constant_c=self.config.net_constant_c,
                seed=self.config.seed + self.lp_iterations,
                max_retries=self.config.max_retries,
            )
            outcome = separate(
                self.instance, result, params, signatures=self.signatures, limit=self.config.cuts_per_round
            )
            if isinstance(outcome, Rounded):
                self.rounding_attempts += outcome.attempts
                self.cutting_sizes.append(len(outcome.lines))
                return outcome
            self.rounding_attempts += 1
            added = 0
            for constraint in outcome:
                if not constraint.lines_crossing:
                    constraint = constraint.with_candidates(self.candidates)
                if not constraint.lines_crossing:
                    constraint = self._augment(constraint)
                added += self._add(constraint)
            if not added:
                raise SolverError(f"t={t}: separation returned only known constraints")
            logger.debug(
                f"t={t}: {added} new constraint(s), first overloads set {outcome[0].witness_set_index} "
                f"({outcome[0].witness_count} points) at value {outcome[0].fractional_value}"
            )
        raise SolverError(f"Round-and-cut at t={t} did not settle within {cap} LP iterations")


def solve_reduction(instance: Instance, cfg: Optional[ReductionConfig] = None) -> Solution:
    cfg = cfg if cfg is not None else ReductionConfig()
    if all(s.fraction == 1 for s in instance.sets):
        return Solution((), ReductionStats())

    shear = Shear.for_points(instance.all_points, cfg.seed)
    work = instance.sheared(shear)
    candidates = candidate_lines(
        work, cfg.seed, constant=cfg.net_sample_constant, verify_net=cfg.verify_net, max_retries=cfg.max_retries
    )
    loop = RoundAndCut(work, candidates, cfg)
    naive = naive_line_bound(work)

    t = 1
    infeasible_below = 0
    widened = False
    while True:
        upper = max(1, len(loop.candidates))
        ceiling = upper if widened else max(1, min(upper, NAIVE_SEARCH_FACTOR * naive))
        logger.info(f"Trying budget t={t} with {len(loop.candidates)} candidates")
        outcome = loop.run(t)
        if isinstance(outcome, Rounded):
            break
        infeasible_below = t
        if t >= ceiling:
            if ceiling >= upper:
                raise SolverError(f"Covering LP infeasible at t={t} with {upper} candidates")
            logger.warning(
                f"LP infeasible at t={t}, {NAIVE_SEARCH_FACTOR}x the naive bound {naive}; "
                f"searching up to {upper}"
            )
            widened = True
            ceiling = upper
        t = min(2 * t, ceiling)
    found_t, found = t, outcome

    if cfg.refine:
        lo, hi = infeasible_below, found_t
        while hi - lo > 1:
            mid = (lo + hi) // 2
            attempt = loop.run(mid)
            if isinstance(attempt, Rounded):
                hi, found_t, found = mid, mid, attempt
            else:
                lo = mid

    lines = tuple(dict.fromkeys(shear.invert_line(line) for line in found.lines))
    report = verify_halving(instance, lines)
    if not report.valid:
        raise SolverError(f"Rounded solution failed verification at {report.worst}")

    t_lower = max(1, ceil(certified_lower_bound(work, loop.constraints, loop.signatures)))
    stats = ReductionStats(
        t=found_t,
        t_lower=t_lower,
        candidate_lower=ceil(loop.lp_lower),
        naive_bound=naive,
        lp_iterations=loop.lp_iterations,
        lp_pivots=loop.lp_pivots,
        rounding_attempts=loop.rounding_attempts,
        cutting_sizes=tuple(loop.cutting_sizes),
        candidates=len(loop.candidates),
        augmented=loop.augmented,
        constraints=len(loop.constraints),
        rounding_blowup=Fraction(len(lines), t_lower),
        shear=shear.q,
    )
    logger.info(f"Reduction solved with {len(lines)} lines (t={found_t}, certified lower bound {t_lower})")
    return Solution(lines, stats)
