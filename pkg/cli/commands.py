"""
Command implementations for solve, compare and check.

Each command prints its report to stdout and returns the process exit
code.
"""

from pathlib import Path
from typing import List, Optional

from config.settings import Settings
from oracle.suites import run_check_suites
from solvers import estimate_convergence_order, make_solver
from solvers.base import SolverResult, SolverStatus, UndefinedOrderError
from utils.exporter import TraceExporter
from utils.logging import Logger

from .jobs import JobSpec, UsageError
from .report import render_check, render_jsonl, render_text

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COLLISION = 3
EXIT_MAX_ITER = 4
EXIT_CHECK_FAILED = 5

EXPORT_FORMATS = ("csv", "json", "xlsx")


def exit_code_for(results: List[SolverResult]) -> int:
    """Collision outranks max_iter; both outrank success."""
    statuses = {r.status for r in results}
    if SolverStatus.COLLISION_DETECTED in statuses:
        return EXIT_COLLISION
    if SolverStatus.MAX_ITER_REACHED in statuses:
        return EXIT_MAX_ITER
    return EXIT_OK


def _run_methods(job: JobSpec, settings: Settings, logger: Logger, record_trace: bool) -> List[SolverResult]:
    p = job.polynomial()
    x0 = job.start_vector()
    results = []
    for method in job.methods:
        config = settings.solver.replace(
            method=method,
            tol=job.tol,
            max_iter=job.max_iter,
            collision_eps=job.collision_eps,
            jitter_retry=job.jitter,
            record_trace=record_trace,
        )
        solver = make_solver(config, logger=logger)
        solver.set_progress_callback(lambda message, fraction: logger.debug(message))
        logger.info(f"Running {method.value} on degree {p.degree}")
        results.append(solver.run(p, x0))
    return results


def _export(command: str, job: JobSpec, results: List[SolverResult], settings: Settings, logger: Logger):
    """
    Write the traces to ``job.export``.

    A bare format name ("csv", "json", "xlsx") generates a dated file
    under the configured export directory; an existing directory (or a
    path ending in a separator) generates a dated CSV inside it.
    """
    if not job.export:
        return
    target = job.export
    label = f"{command}_{'_'.join(m.value for m in job.methods)}_degree{len(job.coefficients)}"
    if target.lower() in EXPORT_FORMATS:
        exporter = TraceExporter(settings.output.export_dir, logger=logger)
        filepath = exporter.generate_filename(label, target.lower())
    elif Path(target).is_dir() or target.endswith(("/", "\\")):
        exporter = TraceExporter(target, logger=logger)
        filepath = exporter.generate_filename(label, "csv")
    else:
        exporter = TraceExporter(settings.output.export_dir, logger=logger)
        filepath = Path(target)
    metadata = {
        "coefficients": " ".join(repr(c) for c in job.coefficients),
        "initial": job.initial,
        "tol": repr(job.tol),
        "max_iter": job.max_iter,
    }
    exporter.export_to_path(results, filepath, metadata)


def _emit(
    job: JobSpec,
    results: List[SolverResult],
    settings: Settings,
    orders: Optional[List[Optional[float]]] = None
):
    digits = settings.output.significant_digits
    for index, result in enumerate(results):
        order = orders[index] if orders is not None else None
        if job.output_format == "jsonl":
            lines = render_jsonl(result, job.trace, order, orders is not None)
        else:
            lines = render_text(result, job.trace, order, orders is not None, digits)
            if index:
                print()
        for line in lines:
            print(line)


def cmd_solve(job: JobSpec, settings: Settings, logger: Logger) -> int:
    """Run the selected method(s) and print roots, iterations and status."""
    results = _run_methods(job, settings, logger, record_trace=job.trace or bool(job.export))
    _emit(job, results, settings)
    _export("solve", job, results, settings, logger)
    return exit_code_for(results)


def cmd_compare(job: JobSpec, settings: Settings, logger: Logger) -> int:
    """Run both methods from the identical start and report estimated orders."""
    job.method = "both"
    results = _run_methods(job, settings, logger, record_trace=True)

    orders: List[Optional[float]] = []
    for result in results:
        try:
            orders.append(estimate_convergence_order(result.trace))
        except UndefinedOrderError as exc:
            logger.info(f"{result.method.value}: {exc}")
            orders.append(None)

    _emit(job, results, settings, orders)
    _export("compare", job, results, settings, logger)
    return exit_code_for(results)


def cmd_check(
    degree: int,
    trials: int,
    seed: int,
    settings: Settings,
    logger: Logger,
    output_format: str = "text"
) -> int:
    """Run the randomized oracle suites; exit 5 when any suite fails."""
    if degree < 1:
        raise UsageError(f"--degree must be >= 1, got {degree}")
    if trials < 1:
        raise UsageError(f"--trials must be >= 1, got {trials}")
    n_jobs = settings.oracle.n_jobs
    if isinstance(n_jobs, bool) or not isinstance(n_jobs, int) or n_jobs == 0:
        raise UsageError(f"n_jobs must be a nonzero integer, got {n_jobs!r}")

    reports = run_check_suites(
        degree,
        trials,
        seed=seed,
        settings=settings.oracle,
        logger=logger,
        progress=lambda message, fraction: logger.debug(message),
    )
    for line in render_check(reports, output_format):
        print(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED
