from .candidates import ORIGINAL, GuardCandidates, candidate_points
from .solver import GuardingConfig, GuardingLoop, GuardSet, GuardStats, guard_budget, solve_guarding
from .trapdag import (
    TrapDag,
    TrapNode,
    base_trapezoids,
    build_trap_dag,
    find_bad_polygon,
    longest_path,
    max_empty_convex,
    trap_dag,
)
from .verify import GuardingReport, verify_guarding

__all__ = [
    "ORIGINAL",
    "GuardCandidates",
    "GuardSet",
    "GuardStats",
    "GuardingConfig",
    "GuardingLoop",
    "GuardingReport",
    "TrapDag",
    "TrapNode",
    "base_trapezoids",
    "build_trap_dag",
    "candidate_points",
    "find_bad_polygon",
    "guard_budget",
    "longest_path",
    "max_empty_convex",
    "solve_guarding",
    "trap_dag",
    "verify_guarding",
]
