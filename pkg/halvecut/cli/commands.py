"""
Command-line front end.

Usage: halvecut [--env-file PATH] [--log-level LEVEL] <command> [options]

Commands:
  halve      Find few lines splitting every point set finely enough.
  guard      Find few guard points piercing every heavy convex region.
  cut        Build a weak cutting for a line file and check it.
  verify     Re-check a result file against its instance.
  gen        Write a generated instance file.
  calibrate  Fit the soft constants used by the size checks.

Exit codes: 0 success, 1 usage or input error, 2 the result failed verification or a solver failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from halvecut import __version__
from halvecut.core import config
from halvecut.core.errors import HalvecutError, InstanceError, SolverError
from halvecut.core.instance import Instance
from halvecut.core.logging import setup_logging
from halvecut.cutting import CuttingParams, WeightedLineSet, simple_weak_cutting, verify_cutting, weak_cutting
from halvecut.geom import Point, as_rational
from halvecut.guarding import GuardingConfig, solve_guarding, verify_guarding
from halvecut.oracle import GeneratorKind, GeneratorSpec, calibrate_constants, gen_instance, save_report
from halvecut.reduction import ReductionConfig, solve_reduction, verify_halving

from .files import dump_instance, dump_result, load_instance, load_result, parse_lines, read_json, to_text, write_json
from .svg import write_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2


class UsageError(HalvecutError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except HalvecutError:
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="halvecut", description="Line halving and convex guarding for planar point sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Overrides LOG_LEVEL for this run.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    halve = commands.add_parser("halve", help="solve the reduction problem")
    halve.add_argument("instance", type=Path)
    halve.add_argument("--seed", type=int, default=config.SEED)
    halve.add_argument("--out", type=Path)
    halve.add_argument("--svg", type=Path)
    halve.add_argument("--shade", action="store_true", help="fill faces by their worst load")
    halve.add_argument("--verify-net", action="store_true", help="check every candidate net exhaustively")

    guard = commands.add_parser("guard", help="solve the guarding problem")
    guard.add_argument("instance", type=Path)
    guard.add_argument("--seed", type=int, default=config.SEED)
    guard.add_argument("--out", type=Path)
    guard.add_argument("--svg", type=Path)

    cut = commands.add_parser("cut", help="weak cutting of a line set")
    cut.add_argument("--lines", type=Path, required=True)
    cut.add_argument("--eps", type=_rational, required=True)
    cut.add_argument("--simple", action="store_true", help="use the sample-and-decompose construction")
    cut.add_argument("--seed", type=int, default=config.SEED)
    cut.add_argument("--out", type=Path)

    verify = commands.add_parser("verify", help="re-check a result file")
    verify.add_argument("instance", type=Path)
    verify.add_argument("--result", type=Path, required=True)

    gen = commands.add_parser("gen", help="generate an instance file")
    gen.add_argument("--kind", choices=[k.value for k in GeneratorKind], required=True)
    gen.add_argument("--n", type=int, required=True, help="points per set")
    gen.add_argument("--seed", type=int, default=config.SEED)
    gen.add_argument("--sets", type=int, default=1)
    gen.add_argument("--fraction", type=_rational, default=Fraction(1, 2))
    gen.add_argument("--box", type=int, default=100)
    gen.add_argument("--out", type=Path)

    calibrate = commands.add_parser("calibrate", help="fit soft constants and write the report")
    calibrate.add_argument("--trials", type=int, default=50)
    calibrate.add_argument("--seed", type=int, default=config.SEED)
    calibrate.add_argument("--out", type=Path, default=Path(config.CALIBRATION_FILE))
    return parser


def _emit(data: Any, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(to_text(data))
    else:
        write_json(out, data)


def cmd_halve(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance).instance
    solution = solve_reduction(instance, ReductionConfig(seed=args.seed, verify_net=args.verify_net))
    report = verify_halving(instance, solution.lines)
    _emit(dump_result(lines=solution.lines, stats=solution.stats, shear=solution.stats.shear, valid=report.valid), args.out)
    if args.svg:
        write_svg(args.svg, instance, lines=solution.lines, shade=args.shade)
    logger.info(f"{solution.size} lines at budget t={solution.stats.t} (certified lower bound {solution.stats.t_lower})")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_guard(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance).instance
    result = solve_guarding(instance, GuardingConfig(seed=args.seed))
    report = verify_guarding(instance, result.guards, seed=args.seed)
    _emit(dump_result(guards=result.guards, stats=result.stats, shear=result.stats.shear, valid=report.valid), args.out)
    if args.svg:
        write_svg(args.svg, instance, guards=result.guards)
    logger.info(f"{result.size} guards at budget t={result.stats.t}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_cut(args: argparse.Namespace) -> int:
    if not (0 < args.eps <= 1):
        raise UsageError(f"--eps must lie in (0, 1], got {args.eps}")
    lines = parse_lines(read_json(args.lines))
    if not lines:
        raise InstanceError(f"{args.lines}: no lines")
    weights = WeightedLineSet.uniform(lines)
    if args.simple:
        cutting = simple_weak_cutting(weights, args.eps, seed=args.seed)
    else:
        cutting = weak_cutting(weights, args.eps, CuttingParams(args.eps, seed=args.seed))
    report = verify_cutting(weights, cutting, args.eps)
    stats = {
        "construction": "simple" if args.simple else "weak",
        "cutting": cutting.stats,
        "eps": args.eps,
        "worst_weight": report.worst_weight,
        "limit": report.limit,
    }
    _emit(dump_result(lines=cutting.lines, stats=stats, valid=report.valid), args.out)
    logger.info(f"{cutting.size} cutting lines; worst face weight {report.worst_weight} of {report.limit} allowed")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_verify(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance).instance
    result = load_result(args.result)
    if result.guards is not None:
        valid = verify_guarding(instance, result.guards).valid
    else:
        valid = verify_halving(instance, result.lines).valid
    if valid != result.valid:
        logger.warning(f"{args.result} records valid={result.valid}, recomputed {valid}")
    sys.stdout.write(f"{result.kind}: {'valid' if valid else 'INVALID'}\n")
    return EXIT_OK if valid else EXIT_INVALID


def cmd_gen(args: argparse.Namespace) -> int:
    if args.sets < 1:
        raise UsageError("--sets must be at least 1")
    points = gen_instance(GeneratorSpec(GeneratorKind(args.kind), args.n * args.sets, args.seed, args.box))
    # Dealt round-robin so every set samples the whole configuration.
    groups: list[list[Point]] = [points[i :: args.sets] for i in range(args.sets)]
    instance = Instance.from_sets([(group, args.fraction) for group in groups])
    _emit(dump_instance(instance, {"seed": args.seed, "name": f"{args.kind}-{args.n}"}), args.out)
    return EXIT_OK


def cmd_calibrate(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    report = calibrate_constants(trials=args.trials, seed=args.seed)
    save_report(report, args.out)
    return EXIT_OK


actions: dict[str, Callable[[argparse.Namespace], int]] = {
    "halve": cmd_halve,
    "guard": cmd_guard,
    "cut": cmd_cut,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "calibrate": cmd_calibrate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"halvecut: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level)
    try:
        return actions[args.command](args)
    except (UsageError, InstanceError) as e:
        print(f"halvecut: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as e:
        # A solver that verified its own output and failed is a bug worth a traceback.
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"halvecut: {e}", file=sys.stderr)
        return EXIT_INVALID
    except HalvecutError as e:
        print(f"halvecut: {args.command} failed: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
