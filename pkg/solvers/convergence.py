"""
Empirical convergence order from an iteration trace.
"""

from typing import List, Tuple

import numpy as np

from .base import IterationTrace, UndefinedOrderError


EPS = float(np.finfo(np.float64).eps)
NOISE_FACTOR = 100.0
PLAUSIBLE_ORDER = (0.5, 5.0)
MAX_WINDOW_SPREAD = 2.0


def order_triples(trace: IterationTrace) -> List[Tuple[int, float]]:
    """
    log(e_{m+1}/e_m) / log(e_m/e_{m-1}) for every usable triple, in order.

    A triple is unusable if any of its step norms is below
    NOISE_FACTOR * eps * max(1, max|x|), if the norms do not strictly
    decrease, or if a ratio degenerates.
    Each entry is paired with the index m-1 of its first step norm.
    """
    e = np.asarray(trace.step_norms, dtype=float)
    scale = 1.0
    if trace.iterates:
        scale = max(1.0, float(np.max(np.abs(trace.iterates[-1]))))
    floor = NOISE_FACTOR * EPS * scale

    triples = []
    for m in range(1, e.size - 1):
        e0, e1, e2 = e[m - 1], e[m], e[m + 1]
        if min(e0, e1, e2) < floor:
            continue
        if not e0 > e1 > e2:
            continue
        den = np.log(e1 / e0)
        num = np.log(e2 / e1)
        if den == 0.0 or not np.isfinite(den) or not np.isfinite(num):
            continue
        triples.append((m - 1, float(num / den)))
    return triples


def _is_erratic(values: List[float]) -> bool:
    """Outside the plausible order range, or spread by more than MAX_WINDOW_SPREAD."""
    median = float(np.median(values))
    if not PLAUSIBLE_ORDER[0] <= median <= PLAUSIBLE_ORDER[1]:
        return True
    return max(values) > MAX_WINDOW_SPREAD * min(values)


def estimate_convergence_order(trace: IterationTrace, window: int = 3) -> float:
    """
    Median order estimate over the last ``window`` usable triples.

    The triple anchored at the start vector only counts when it is the
    only usable one, since e_0 reflects the arbitrary start. When the
    trailing window is erratic (rounding noise near a multiple root
    typically produces ratios in the hundreds or near zero), the median
    over every usable triple is returned instead.

    Args:
        trace: Iteration trace with step norms
        window: Number of trailing triples to take the median over

    Returns:
        Estimated convergence order

    Raises:
        UndefinedOrderError: If no triple is usable
    """
    triples = order_triples(trace)
    if not triples:
        raise UndefinedOrderError(
            f"No usable step-norm triple among {len(trace.step_norms)} steps"
        )
    if len(triples) > 1 and triples[0][0] == 0:
        triples = triples[1:]
    q = [value for _, value in triples]
    tail = q[-max(1, window):]
    if _is_erratic(tail):
        return float(np.median(q))
    return float(np.median(tail))
