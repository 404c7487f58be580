"""
Command-line entry point: vieta-roots {solve,compare,check}.
"""

import argparse
from typing import Optional, Sequence

from config.settings import Settings, resolve_settings
from utils.logging import Logger

from .commands import EXIT_USAGE, cmd_check, cmd_compare, cmd_solve
from .jobs import FORMAT_CHOICES, METHOD_CHOICES, JobSpec, UsageError, coefficients_from_args, parse_complex_list


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--config",
        default=None,
        help="JSON settings file; its values become defaults, explicit flags win.",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log progress to stderr.",
    )
    parser.add_argument(
        "--format",
        choices=FORMAT_CHOICES,
        default=None,
        help="Report format (default: text).",
    )


def _add_job_arguments(parser: argparse.ArgumentParser, with_method: bool = True):
    parser.add_argument(
        "--coeffs",
        nargs="+",
        default=None,
        help='Coefficients a_0 ... a_{n-1}, leading 1 implied, e.g. "6 0 -5 0".',
    )
    parser.add_argument(
        "--coeffs-file",
        default=None,
        help="File with one coefficient per line, a_0 first; '#' starts a comment.",
    )
    parser.add_argument(
        "--start",
        nargs="+",
        default=None,
        help='Explicit start vector, e.g. "1+i 20+30i 30+50i -40+30i".',
    )
    parser.add_argument(
        "--circle-seed",
        type=int,
        default=0,
        help="Rotation seed of the default circle start (default: 0).",
    )
    if with_method:
        parser.add_argument(
            "--method",
            choices=METHOD_CHOICES,
            default="wdk",
            help="Iteration to run (default: wdk).",
        )
    parser.add_argument("--tol", type=float, default=None, help="Stopping tolerance on the step 1-norm (default 1e-15).")
    parser.add_argument("--max-iter", type=int, default=None, help="Iteration cap (default 1000).")
    parser.add_argument("--collision-eps", type=float, default=None, help="Relative collision floor (default 1e-12).")
    parser.add_argument("--jitter", action="store_true", help="Re-seed a colliding entry instead of aborting.")
    parser.add_argument("--trace", action="store_true", help="Print every iterate.")
    parser.add_argument(
        "--export",
        default=None,
        help="Trace file (.csv, .json, .xlsx), a directory, or a bare format name for a dated file.",
    )


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vieta-roots",
        description="Simultaneous polynomial root finding with the Weierstrass-Kerner and Chebyshev iterations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Find all roots with one or both methods.")
    _add_job_arguments(solve)
    _add_common(solve)

    compare = sub.add_parser("compare", help="Run both methods from the same start and estimate their orders.")
    _add_job_arguments(compare, with_method=False)
    _add_common(compare)

    check = sub.add_parser("check", help="Cross-check closed forms against dense linear algebra.")
    check.add_argument("--degree", type=int, default=6, help="Polynomial degree (default: 6).")
    check.add_argument("--trials", type=int, default=100, help="Number of random instances (default: 100).")
    check.add_argument("--seed", type=int, default=0, help="Root seed (default: 0).")
    check.add_argument("--jobs", type=int, default=None, help="Worker threads (default from settings).")
    _add_common(check)

    return parser


def _pick(flag, fallback):
    return fallback if flag is None else flag


def job_from_args(args: argparse.Namespace, settings: Settings) -> JobSpec:
    """
    Merge parsed flags with settings defaults into a JobSpec.

    Raises:
        UsageError: On malformed or inconsistent input
    """
    coefficients = coefficients_from_args(args.coeffs, args.coeffs_file)
    start = parse_complex_list(" ".join(args.start)) if args.start else None
    return JobSpec(
        coefficients=coefficients,
        initial="explicit" if start is not None else "circle",
        circle_seed=args.circle_seed,
        start=start,
        method=getattr(args, "method", "both"),
        tol=_pick(args.tol, settings.solver.tol),
        max_iter=_pick(args.max_iter, settings.solver.max_iter),
        trace=args.trace,
        output_format=_pick(args.format, settings.output.format),
        export=args.export,
        collision_eps=_pick(args.collision_eps, settings.solver.collision_eps),
        jitter=args.jitter or settings.solver.jitter_retry,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger = Logger(min_level="INFO" if args.verbose else "WARNING")
    settings = resolve_settings(args.config, logger=logger)

    try:
        if args.command == "check":
            if args.jobs is not None:
                settings.oracle.n_jobs = args.jobs
            return cmd_check(
                args.degree,
                args.trials,
                args.seed,
                settings,
                logger,
                output_format=_pick(args.format, settings.output.format),
            )

        job = job_from_args(args, settings)
        if args.command == "compare":
            return cmd_compare(job, settings, logger)
        return cmd_solve(job, settings, logger)

    except UsageError as exc:
        logger.error(str(exc))
        return EXIT_USAGE
