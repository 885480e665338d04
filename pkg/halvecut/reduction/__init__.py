from .candidates import candidate_lines, draw_nets, net_size, pair_lines, verify_corridor_net
from .cells import Cell, PointSignatures
from .constraints import ViolatedConstraint
from .program import FractionalSolution, Infeasible, lp_feasible
from .rounding import Rounded, round_fractional, rounding_eps, separate
from .solver import (
    ReductionConfig,
    ReductionStats,
    RoundAndCut,
    Solution,
    certified_lower_bound,
    naive_line_bound,
    solve_reduction,
)
from .verify import HalvingReport, verify_halving

__all__ = [
    "Cell",
    "FractionalSolution",
    "HalvingReport",
    "Infeasible",
    "PointSignatures",
    "ReductionConfig",
    "ReductionStats",
    "RoundAndCut",
    "Rounded",
    "Solution",
    "ViolatedConstraint",
    "candidate_lines",
    "certified_lower_bound",
    "draw_nets",
    "lp_feasible",
    "naive_line_bound",
    "net_size",
    "pair_lines",
    "round_fractional",
    "rounding_eps",
    "separate",
    "solve_reduction",
    "verify_corridor_net",
    "verify_halving",
]
