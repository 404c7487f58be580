"""
Chebyshev iteration on the Vieta system (Tanabe's method).

The generic third-order step

    x <- x - F'^-1 (F + 1/2 F''(F'^-1 F, F'^-1 F))

collapses on the Vieta system to a componentwise update built from the
Weierstrass quotients W_v = p(x_v) / B^(v)(x_v):

    x_l <- x_l - W_l * (sum_{v != l} W_v / (x_v - x_l) - 1)

The n quotients are computed once per step, so a sweep costs O(n^2).
"""

import numpy as np

from config.settings import Method
from core.poly import MonicPolynomial, RootVector
from core.vieta_system import DEFAULT_COLLISION_EPS, SingularJacobianError, weierstrass_quotients

from .base import BaseSolver, CollisionError


def chebyshev_correction_sums(x: RootVector, w: np.ndarray) -> np.ndarray:
    """
    S_l = sum_{v != l} W_v / (x_v - x_l).

    Terms are summed in sorted order so that permuting x permutes S
    exactly. W_l * S_l equals half of component l of
    F'^-1 F''(F'^-1 F, F'^-1 F).
    """
    x = np.asarray(x, dtype=np.complex128)
    diffs = x[None, :] - x[:, None]  # [l, v] = x_v - x_l
    np.fill_diagonal(diffs, 1.0)
    terms = w[None, :] / diffs
    np.fill_diagonal(terms, 0.0)
    return np.sum(np.sort(terms, axis=1), axis=1)


def chebyshev_step(
    x: RootVector,
    p: MonicPolynomial,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """
    One simultaneous Chebyshev (Tanabe) update.

    Args:
        x: Current iterate
        p: Monic polynomial
        collision_eps: Relative separation floor

    Returns:
        New iterate

    Raises:
        CollisionError: If two entries of x coincide
    """
    x = np.asarray(x, dtype=np.complex128)
    try:
        w = weierstrass_quotients(x, p, collision_eps)
    except SingularJacobianError as exc:
        raise CollisionError(exc.i, exc.j, exc.separation) from exc
    return x - w * (chebyshev_correction_sums(x, w) - 1.0)


class ChebyshevSolver(BaseSolver):
    """Third-order simultaneous iteration (Chebyshev on the Vieta system)."""

    method = Method.CHEBYSHEV

    def step(self, x: RootVector, p: MonicPolynomial) -> np.ndarray:
        return chebyshev_step(x, p, self.config.collision_eps)
