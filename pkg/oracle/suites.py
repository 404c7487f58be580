"""
Randomized cross-validation suites.

Each trial draws its own generator from SeedSequence(seed).spawn(trials),
so results do not depend on how trials are sharded across workers.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from config.settings import Method, OracleSettings
from core.poly import MonicPolynomial, deflated_product, from_roots, min_pairwise_separation, pairwise_deflated_product
from core.vieta_system import (
    bilinear_apply,
    generating_value,
    hessian_block_column,
    jacobian_column,
)
from utils.logging import Logger, default_logger

from .dense import (
    assemble_hessian_blocks,
    assemble_jacobian,
    assemble_tensor,
    closed_form_inverse,
    compare_steps,
    dense_inverse,
    finite_difference_hessian_block,
    finite_difference_jacobian,
)


@dataclass
class SuiteReport:
    """Outcome of one suite over all trials."""
    name: str
    trials: int
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation < self.tolerance)


def random_instance(
    rng: np.random.Generator,
    n: int,
    max_perturbation: float = 0.3
) -> Tuple[np.ndarray, MonicPolynomial, np.ndarray]:
    """
    Well-separated roots in the unit disk and a perturbed iterate.

    Roots sit near a circle of radius 0.6-1.0 with jittered angles.
    Each iterate entry moves by at most min(max_perturbation,
    separation / 4), so iterates stay distinct.

    Returns:
        (roots, polynomial, iterate)
    """
    angles = 2.0 * np.pi * (np.arange(n) + rng.uniform(-0.2, 0.2, n)) / n
    radii = rng.uniform(0.6, 1.0, n)
    roots = radii * np.exp(1j * angles)

    sep = min_pairwise_separation(roots)
    cap = min(max_perturbation, sep / 4.0)
    offsets = rng.uniform(0.0, cap, n) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, n))
    return roots, from_roots(roots), roots + offsets


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    """max |a - b| / (1 + max |b|)."""
    return float(np.max(np.abs(a - b)) / (1.0 + np.max(np.abs(b))))


def _trial(n: int, seed_seq: np.random.SeedSequence, settings: OracleSettings) -> Dict[str, float]:
    """All suite deviations for one random instance."""
    rng = np.random.default_rng(seed_seq)
    _, p, x = random_instance(rng, n, settings.max_perturbation)
    out: Dict[str, float] = {}

    out["wdk_vs_newton"] = compare_steps(x, p, Method.WEIERSTRASS_KERNER).max_relative_deviation
    out["chebyshev_vs_generic"] = compare_steps(x, p, Method.CHEBYSHEV).max_relative_deviation

    inv_closed = closed_form_inverse(x)
    out["inverse"] = float(np.max(np.abs(inv_closed - dense_inverse(x))))

    J = assemble_jacobian(x)
    out["kronecker"] = float(np.max(np.abs(inv_closed @ J - np.eye(n))))
    out["fd_jacobian"] = _relative(finite_difference_jacobian(x, settings.fd_step), J)

    blocks = assemble_hessian_blocks(x)
    out["fd_hessian"] = max(
        _relative(finite_difference_hessian_block(x, k, settings.fd_step), blocks[k])
        for k in range(n)
    )

    # Generating identities at a random point
    t = complex(rng.normal(), rng.normal())
    worst = 0.0
    for k in range(n):
        expected = deflated_product(x, k, t)
        got = generating_value(jacobian_column(x, k), t)
        worst = max(worst, abs(got - expected) / (1.0 + abs(expected)))
        for l in range(n):
            if l == k:
                continue
            expected = pairwise_deflated_product(x, l, k, t)
            got = generating_value(hessian_block_column(x, k, l), t)
            worst = max(worst, abs(got - expected) / (1.0 + abs(expected)))
    out["generating_identities"] = worst

    # Left multiplication commutes with the bilinear form
    tensor = assemble_tensor(x)
    B = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    y = rng.normal(size=n) + 1j * rng.normal(size=n)
    z = rng.normal(size=n) + 1j * rng.normal(size=n)
    lhs = B @ bilinear_apply(tensor, y, z)
    rhs = bilinear_apply(tensor.premultiply(B), y, z)
    out["premultiply_identity"] = _relative(lhs, rhs)

    return out


def _tolerances(settings: OracleSettings) -> Dict[str, float]:
    return {
        "wdk_vs_newton": settings.step_tolerance,
        "chebyshev_vs_generic": settings.step_tolerance,
        "inverse": settings.inverse_tolerance,
        "kronecker": settings.kronecker_tolerance,
        "fd_jacobian": settings.fd_jacobian_tolerance,
        "fd_hessian": settings.fd_hessian_tolerance,
        "generating_identities": settings.identity_tolerance,
        "premultiply_identity": settings.premultiply_tolerance,
    }


def run_check_suites(
    degree: int,
    trials: int,
    seed: int = 0,
    settings: Optional[OracleSettings] = None,
    logger: Optional[Logger] = None,
    progress: Optional[Callable[[str, float], None]] = None
) -> List[SuiteReport]:
    """
    Run every suite over ``trials`` random instances of degree ``degree``.

    Args:
        degree: Polynomial degree (>= 1)
        trials: Number of random instances (>= 1)
        seed: Root seed of the per-trial SeedSequence
        settings: Tolerances and finite-difference step
        logger: Optional Logger
        progress: Optional (message, fraction) callback

    Returns:
        One SuiteReport per suite, in a fixed order
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    settings = settings or OracleSettings()
    logger = logger or default_logger()
    seeds = np.random.SeedSequence(seed).spawn(trials)

    logger.info(f"Running {trials} trials at degree {degree} (n_jobs={settings.n_jobs})")
    rows = Parallel(n_jobs=settings.n_jobs, prefer="threads")(
        delayed(_trial)(degree, s, settings) for s in seeds
    )
    if progress:
        progress("check suites complete", 1.0)

    reports = []
    for name, tol in _tolerances(settings).items():
        worst = max(row[name] for row in rows)
        report = SuiteReport(name=name, trials=trials, max_deviation=worst, tolerance=tol)
        if not report.passed:
            logger.warning(f"Suite {name} exceeded tolerance: {worst:.3e} >= {tol:.1e}")
        reports.append(report)
    return reports
