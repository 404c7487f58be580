"""
Solver module for the simultaneous root finder.

This module contains the simultaneous iterations:
- Weierstrass-Kerner (second order)
- Chebyshev / Tanabe (third order)
- Start vectors and convergence-order estimation
"""

from typing import Optional

from config.settings import Method, SolverConfig
from core.poly import MonicPolynomial, RootVector
from utils.logging import Logger

from .base import (
    BaseSolver,
    SolverResult,
    SolverStatus,
    IterationTrace,
    SolverError,
    CollisionError,
    UndefinedOrderError,
)
from .weierstrass import WeierstrassKernerSolver, wdk_step
from .chebyshev import ChebyshevSolver, chebyshev_step
from .initial import default_initial_guess
from .convergence import estimate_convergence_order


SOLVERS = {
    Method.WEIERSTRASS_KERNER: WeierstrassKernerSolver,
    Method.CHEBYSHEV: ChebyshevSolver,
}


def make_solver(config: SolverConfig, logger: Optional[Logger] = None) -> BaseSolver:
    """Instantiate the solver class selected by ``config.method``."""
    return SOLVERS[config.method](config, logger=logger)


def solve(
    p: MonicPolynomial,
    x0: RootVector,
    config: Optional[SolverConfig] = None,
    logger: Optional[Logger] = None
) -> SolverResult:
    """
    Run the configured simultaneous iteration from x0.

    Args:
        p: Monic polynomial
        x0: Start vector of length p.degree
        config: Solver configuration (defaults if None)
        logger: Optional Logger

    Returns:
        SolverResult with roots, iteration count, status and optional trace
    """
    return make_solver(config or SolverConfig(), logger=logger).run(p, x0)


__all__ = [
    'BaseSolver',
    'SolverResult',
    'SolverStatus',
    'IterationTrace',
    'SolverError',
    'CollisionError',
    'UndefinedOrderError',
    'WeierstrassKernerSolver',
    'ChebyshevSolver',
    'wdk_step',
    'chebyshev_step',
    'default_initial_guess',
    'estimate_convergence_order',
    'make_solver',
    'solve',
]
