"""
Base solver interface for the simultaneous root finder.

This module defines the iteration trace, the solver result and the
base solver class that owns the iteration loop and its stopping rule.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np
import pandas as pd

from config.settings import Method, SolverConfig
from core.poly import MonicPolynomial, RootVector, PolynomialError, as_root_vector, eval_poly
from utils.logging import Logger, default_logger


class SolverError(Exception):
    """Base exception for solver errors."""
    pass


class CollisionError(SolverError):
    """Raised by a step when two entries of the iterate coincide."""

    def __init__(self, i: int, j: int, separation: float):
        self.i = i
        self.j = j
        self.separation = separation
        super().__init__(
            f"Collision between entries {i} and {j} (separation {separation:.3e})"
        )

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.i, self.j)


class UndefinedOrderError(SolverError):
    """Raised when a trace holds no usable triple for order estimation."""
    pass


class SolverStatus(str, Enum):
    CONVERGED = "converged"
    MAX_ITER_REACHED = "max_iter_reached"
    COLLISION_DETECTED = "collision_detected"


@dataclass
class IterationTrace:
    """
    Per-iteration record.

    iterates holds x^(0), ..., x^(m); step_norms[i] is the 1-norm of
    x^(i+1) - x^(i) and residual_norms[i] is max_l |p(x_l^(i+1))|.
    """
    iterates: List[np.ndarray] = field(default_factory=list)
    step_norms: List[float] = field(default_factory=list)
    residual_norms: List[float] = field(default_factory=list)

    @property
    def steps(self) -> int:
        return len(self.step_norms)

    def append(self, x_new: np.ndarray, step_norm: float, residual: float):
        self.iterates.append(x_new)
        self.step_norms.append(step_norm)
        self.residual_norms.append(residual)

    def to_frame(self) -> pd.DataFrame:
        """One row per iterate with real/imaginary columns per component."""
        if not self.iterates:
            return pd.DataFrame()
        X = np.vstack(self.iterates)
        data = {"m": np.arange(X.shape[0])}
        for j in range(X.shape[1]):
            data[f"x{j + 1}_re"] = X[:, j].real
            data[f"x{j + 1}_im"] = X[:, j].imag
        # Row 0 is the start vector and has no step
        data["step_norm"] = [np.nan] + list(self.step_norms)
        data["residual"] = [np.nan] + list(self.residual_norms)
        return pd.DataFrame(data)


@dataclass
class SolverResult:
    """Complete result from a solve."""
    roots: np.ndarray
    iterations: int
    status: SolverStatus
    method: Method
    trace: Optional[IterationTrace] = None

    final_step_norm: float = float("nan")
    final_residual: float = float("nan")

    # Set when status is COLLISION_DETECTED
    collision_pair: Optional[Tuple[int, int]] = None
    jitter_count: int = 0
    message: str = ""

    @property
    def converged(self) -> bool:
        return self.status == SolverStatus.CONVERGED


class BaseSolver(ABC):
    """
    Abstract base class for simultaneous iterations.

    Subclasses implement step(); run() drives the loop with the
    1-norm stopping rule of SolverConfig.
    """

    method: Method

    def __init__(self, config: Optional[SolverConfig] = None, logger: Optional[Logger] = None):
        """
        Initialize solver.

        Args:
            config: Solver configuration (defaults if None)
            logger: Logger instance (library default if None)
        """
        self.config = config or SolverConfig(method=self.method)
        self.logger = logger or default_logger()
        self._progress_callback: Optional[Callable[[str, float], None]] = None

    def set_progress_callback(self, callback: Callable[[str, float], None]):
        """
        Set callback for progress updates.

        Callback receives (status_message, progress_fraction)
        """
        self._progress_callback = callback

    def _update_progress(self, message: str, fraction: float = 0.0):
        """Report progress to callback if set."""
        if self._progress_callback:
            self._progress_callback(message, fraction)

    @abstractmethod
    def step(self, x: RootVector, p: MonicPolynomial) -> np.ndarray:
        """
        Compute one simultaneous update.

        Raises:
            CollisionError: If entries of x collide
        """
        pass

    def run(self, p: MonicPolynomial, x0: RootVector) -> SolverResult:
        """
        Iterate until the step 1-norm drops below tol or max_iter is hit.

        Args:
            p: Monic polynomial
            x0: Start vector, length = degree of p

        Returns:
            SolverResult; collisions end the run with COLLISION_DETECTED
        """
        x = np.array(as_root_vector(x0))
        if x.size != p.degree:
            raise PolynomialError(
                f"Start vector has {x.size} entries, polynomial degree is {p.degree}"
            )

        cfg = self.config
        trace = IterationTrace(iterates=[x.copy()]) if cfg.record_trace else None
        status = SolverStatus.MAX_ITER_REACHED
        step_norm = float("nan")
        residual = float(np.max(np.abs(eval_poly(p, x))))
        jitters = 0
        iterations = 0
        collision = None
        message = ""

        while iterations < cfg.max_iter:
            try:
                x_new = self.step(x, p)
            except CollisionError as exc:
                if cfg.jitter_retry and jitters < cfg.max_jitter_retries:
                    jitters += 1
                    x = self._jitter(x, p, exc.j, jitters)
                    if trace is not None:
                        trace.iterates[-1] = x.copy()
                    self.logger.warning(
                        f"{self.method.value}: {exc}; re-seeding entry {exc.j} "
                        f"(retry {jitters}/{cfg.max_jitter_retries})"
                    )
                    continue
                status = SolverStatus.COLLISION_DETECTED
                collision = exc.pair
                message = str(exc)
                self.logger.warning(f"{self.method.value}: {exc} at iteration {iterations}")
                break

            iterations += 1
            step_norm = float(np.sum(np.abs(x_new - x)))
            residual = float(np.max(np.abs(eval_poly(p, x_new))))
            x = x_new

            if trace is not None:
                trace.append(x.copy(), step_norm, residual)

            self._update_progress(
                f"{self.method.value} m={iterations} step={step_norm:.3e} residual={residual:.3e}",
                iterations / cfg.max_iter
            )

            if step_norm < cfg.tol:
                status = SolverStatus.CONVERGED
                break

        if status == SolverStatus.MAX_ITER_REACHED:
            message = f"No convergence within {cfg.max_iter} iterations"
            self.logger.info(f"{self.method.value}: {message}")

        return SolverResult(
            roots=x,
            iterations=iterations,
            status=status,
            method=self.method,
            trace=trace,
            final_step_norm=step_norm,
            final_residual=residual,
            collision_pair=collision,
            jitter_count=jitters,
            message=message,
        )

    def _jitter(self, x: np.ndarray, p: MonicPolynomial, index: int, retry: int) -> np.ndarray:
        """Move entry ``index`` to the start circle, seeded by the retry number."""
        from .initial import default_initial_guess

        candidates = default_initial_guess(p, seed=retry)
        others = np.delete(x, index)
        # Farthest circle point from the remaining entries
        distances = np.min(np.abs(candidates[:, None] - others[None, :]), axis=1) \
            if others.size else np.ones(candidates.size)
        x = x.copy()
        x[index] = candidates[int(np.argmax(distances))]
        return x
