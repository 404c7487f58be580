"""
Weierstrass-Kerner (Durand-Kerner) iteration.

Newton's method on the Vieta system collapses to

    x_l <- x_l - p(x_l) / prod_{j != l}(x_l - x_j)

for every l at once. Locally quadratic at simple roots.
"""

import numpy as np

from config.settings import Method
from core.poly import MonicPolynomial, RootVector
from core.vieta_system import DEFAULT_COLLISION_EPS, SingularJacobianError, weierstrass_quotients

from .base import BaseSolver, CollisionError


def wdk_step(
    x: RootVector,
    p: MonicPolynomial,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """
    One simultaneous Weierstrass-Kerner update.

    All corrections are computed from the same x and applied at once.

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
    return x + w


class WeierstrassKernerSolver(BaseSolver):
    """Second-order simultaneous iteration (Newton on the Vieta system)."""

    method = Method.WEIERSTRASS_KERNER

    def step(self, x: RootVector, p: MonicPolynomial) -> np.ndarray:
        return wdk_step(x, p, self.config.collision_eps)
