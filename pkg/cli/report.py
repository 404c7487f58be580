"""
Text and json-lines rendering of solver and check results.

Everything here is a pure function of its inputs, so identical jobs
produce byte-identical output.
"""

import json
import math
from typing import Iterable, List, Optional

import numpy as np

from oracle.suites import SuiteReport
from solvers.base import SolverResult

LINEAR_ORDER_THRESHOLD = 1.5


def canonical_order(roots: np.ndarray) -> np.ndarray:
    """Sort by real part, then imaginary part, ties by modulus."""
    roots = np.asarray(roots, dtype=np.complex128)
    keys = sorted(range(roots.size), key=lambda i: (roots[i].real, roots[i].imag, abs(roots[i])))
    return roots[keys]


def format_real(value: float, digits: int = 16) -> str:
    """Scientific notation with ``digits`` significant digits."""
    return f"{value:.{digits - 1}E}"


def format_complex(z: complex, digits: int = 16) -> str:
    return f"{format_real(z.real, digits)}{'+' if z.imag >= 0 else '-'}{format_real(abs(z.imag), digits)}i"


def _finite_or_none(value: float) -> Optional[float]:
    return None if value is None or not math.isfinite(value) else float(value)


def _pairs(x: Iterable[complex]) -> List[List[float]]:
    return [[float(z.real), float(z.imag)] for z in x]


def describe_order(order: Optional[float]) -> str:
    if order is None:
        return "undefined"
    text = f"{order:.3f}"
    if order < LINEAR_ORDER_THRESHOLD:
        text += "  linear (multiple or clustered roots?)"
    return text


def render_text(
    result: SolverResult,
    show_trace: bool = False,
    order: Optional[float] = None,
    order_known: bool = False,
    digits: int = 16
) -> List[str]:
    """Lines for one method run."""
    lines = [
        f"method: {result.method.value}",
        f"status: {result.status.value}",
        f"iterations: {result.iterations}",
        f"final step 1-norm: {format_real(result.final_step_norm, 4) if math.isfinite(result.final_step_norm) else 'n/a'}",
        f"final residual: {format_real(result.final_residual, 4)}",
    ]
    if result.collision_pair is not None:
        i, j = result.collision_pair
        lines.append(f"collision: entries {i + 1} and {j + 1}")
    if result.jitter_count:
        lines.append(f"jitter retries: {result.jitter_count}")
    if order_known:
        lines.append(f"estimated order: {describe_order(order)}")

    lines.append("roots:")
    for z in canonical_order(result.roots):
        lines.append(f"  {format_complex(z, digits)}")

    if show_trace and result.trace is not None:
        lines.append("trace (m, iterate, step 1-norm, residual):")
        trace = result.trace
        for m in range(1, len(trace.iterates)):
            entries = "  ".join(format_complex(z, digits) for z in trace.iterates[m])
            lines.append(
                f"  m={m:<4d} {entries}  {format_real(trace.step_norms[m - 1], 4)}"
                f"  {format_real(trace.residual_norms[m - 1], 4)}"
            )
    return lines


def render_jsonl(
    result: SolverResult,
    show_trace: bool = False,
    order: Optional[float] = None,
    order_known: bool = False
) -> List[str]:
    """
    One record per iteration (when tracing) and one summary record.

    Floats go through json's repr-based encoding and round-trip exactly.
    """
    method = result.method.value
    lines = []
    if show_trace and result.trace is not None:
        trace = result.trace
        for m, x in enumerate(trace.iterates):
            record = {
                "m": m,
                "x": _pairs(x),
                "step_norm": None if m == 0 else trace.step_norms[m - 1],
                "residual": None if m == 0 else trace.residual_norms[m - 1],
                "method": method,
            }
            lines.append(json.dumps(record))

    summary = {
        "type": "summary",
        "method": method,
        "status": result.status.value,
        "iterations": result.iterations,
        "roots": _pairs(canonical_order(result.roots)),
        "final_step_norm": _finite_or_none(result.final_step_norm),
        "final_residual": _finite_or_none(result.final_residual),
        "collision_pair": list(result.collision_pair) if result.collision_pair else None,
        "jitter_count": result.jitter_count,
    }
    if order_known:
        summary["order"] = _finite_or_none(order)
    lines.append(json.dumps(summary))
    return lines


def render_check(reports: List[SuiteReport], fmt: str = "text") -> List[str]:
    """One line per suite plus an overall verdict."""
    if fmt == "jsonl":
        lines = [json.dumps({
            "suite": r.name,
            "trials": r.trials,
            "max_deviation": r.max_deviation,
            "tolerance": r.tolerance,
            "passed": r.passed,
        }) for r in reports]
        lines.append(json.dumps({"type": "summary", "passed": all(r.passed for r in reports)}))
        return lines

    width = max(len(r.name) for r in reports)
    lines = [
        f"{r.name:<{width}}  max deviation {r.max_deviation:.3e}  tolerance {r.tolerance:.1e}  "
        f"{'PASS' if r.passed else 'FAIL'}"
        for r in reports
    ]
    lines.append("all suites passed" if all(r.passed for r in reports) else "suite failure")
    return lines
