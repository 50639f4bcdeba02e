"""Command-line entry point.

Subcommands:
    simulate --config <path> --out <dir>
    table1
    optimal-subset --scores <csv-list> --l <k>
    sigma-curve [--gamma <g>] --out <file.svg>

Exit codes: 0 success, 1 validation error, 2 reference mismatch (table1),
3 runtime contract violation.
"""

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from prebandit import __version__
from prebandit.cli import output, table1
from prebandit.cli.config_loader import load_config
from prebandit.config import settings
from prebandit.core.errors import ContractViolation, InvalidInputError
from prebandit.core.logging import setup_logging
from prebandit.model.types import ScoreVector
from prebandit.optim.subsets import (
    f_minimizer,
    optimal_subset_bruteforce,
    optimal_subset_greedy,
)
from prebandit.policies.sigmoid import SShapedFunction
from prebandit.sim.batch import run_batch

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_MISMATCH = 2
EXIT_CONTRACT = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors use the validation exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def parse_scores(raw: str) -> ScoreVector:
    """Parse a comma-separated list of positive scores."""
    try:
        values = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidInputError(f"malformed score list {raw!r}: {e}") from e
    if len(values) < 2:
        raise InvalidInputError(f"need at least 2 scores, got {len(values)}")
    if any(not math.isfinite(x) or x <= 0.0 for x in values):
        raise InvalidInputError(f"scores must be positive and finite: {raw!r}")
    return ScoreVector.of(values)


def cmd_simulate(config_path: Path, out_dir: Path, workers: Optional[int] = None) -> int:
    """Run an experiment file and write regret.csv, regret.svg and summary.json."""
    config = load_config(config_path)
    out_dir.mkdir(parents=True, exist_ok=True)

    results = run_batch(config, workers=workers)

    output.write_csv(results, out_dir / "regret.csv")
    output.write_regret_svg(results, out_dir / "regret.svg", title=config.name)
    output.write_summary(config, results, out_dir / "summary.json")

    for result in results:
        last = result.checkpoints[-1]
        print(
            f"{result.policy}: mean Reg({last}) = {result.mean_at(last):.3f} "
            f"(std {result.std_at(last):.3f})"
        )
    print(f"Wrote {out_dir / 'regret.csv'}")
    return EXIT_OK


def cmd_table1() -> int:
    """Print the reference reward table and check its optimal subsets."""
    reports = [table1.evaluate(instance) for instance in table1.INSTANCES]
    print(table1.format_report(reports))
    return EXIT_OK if all(r.matches for r in reports) else EXIT_MISMATCH


def cmd_optimal_subset(raw_scores: str, l: int) -> int:
    """Print the greedy optimum and, when affordable, its exhaustive confirmation."""
    v = parse_scores(raw_scores)
    result = optimal_subset_greedy(v, l)
    print(f"greedy:      {result.subset.label}  reward {result.reward:.6f}")
    print(f"decoy point: {f_minimizer(result.subset, v):.6f}")

    if math.comb(v.n, l) <= settings.brute_force_budget:
        exhaustive = optimal_subset_bruteforce(v, l)
        agrees = math.isclose(exhaustive.reward, result.reward, rel_tol=0.0, abs_tol=1e-12)
        print(
            f"brute force: {exhaustive.subset.label}  reward {exhaustive.reward:.6f}  "
            f"({'agrees' if agrees else 'DISAGREES'})"
        )
        if not agrees:
            return EXIT_CONTRACT
    else:
        print("brute force: skipped (C(n, l) over budget)")
    return EXIT_OK


def cmd_sigma_curve(gamma: float, out_path: Path) -> int:
    """Plot the clamp and arctan S-shaped functions."""
    functions = [SShapedFunction(kind="clamp"), SShapedFunction(kind="arctan", gamma=gamma)]
    output.write_sigma_svg(functions, out_path)
    print(f"Wrote {out_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prebandit", description="Preselection bandit experiments")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--json-logs", action="store_true", help="Emit JSON log lines")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="Run an experiment file")
    simulate.add_argument("--config", required=True, type=Path, help="TOML experiment file")
    simulate.add_argument("--out", required=True, type=Path, help="Output directory")
    simulate.add_argument(
        "--threads", type=int, default=None, help="Worker processes (default: PREBANDIT_THREADS)"
    )

    sub.add_parser("table1", help="Reproduce the reference reward table")

    opt = sub.add_parser("optimal-subset", help="Optimal l-subset for given scores")
    opt.add_argument("--scores", required=True, help="Comma-separated scores, e.g. 1,0.5,0.2")
    opt.add_argument("--l", required=True, type=int, help="Preselection size")

    sigma = sub.add_parser("sigma-curve", help="Plot the S-shaped functions used by CBR")
    sigma.add_argument("--gamma", type=float, default=2.0, help="Steepness of the arctan variant")
    sigma.add_argument("--out", required=True, type=Path, help="SVG file to write")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = "DEBUG" if args.verbose else settings.log_level
    setup_logging(level, json_logs=args.json_logs or settings.json_logs)

    try:
        if args.command == "simulate":
            return cmd_simulate(args.config, args.out, workers=args.threads)
        if args.command == "table1":
            return cmd_table1()
        if args.command == "optimal-subset":
            return cmd_optimal_subset(args.scores, args.l)
        if args.command == "sigma-curve":
            return cmd_sigma_curve(args.gamma, args.out)
    except ContractViolation as e:
        logger.error(f"Contract violation: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except (InvalidInputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    parser.error(f"unknown command {args.command!r}")
    return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
