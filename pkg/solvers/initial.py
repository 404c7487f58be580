"""
Start vectors for the simultaneous iterations.
"""

import numpy as np

from core.poly import MonicPolynomial

# Classical Durand-Kerner phase offset
BASE_PHASE = 0.4
GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))


def start_radius(p: MonicPolynomial) -> float:
    """1 + max_j |a_j|, an upper bound on every root modulus."""
    return 1.0 + float(np.max(np.abs(p.coeffs)))


def default_initial_guess(p: MonicPolynomial, seed: int = 0) -> np.ndarray:
    """
    n points equally spaced on a circle around the root centroid.

    The circle has radius 1 + max|a_j| and center -a_{n-1}/n. The phase
    offset is BASE_PHASE shifted by seed golden angles, so every seed
    gives a different but reproducible rotation.

    Args:
        p: Monic polynomial
        seed: Rotation seed

    Returns:
        Complex start vector of length n
    """
    n = p.degree
    center = -p.coeffs[-1] / n
    phase = np.mod(BASE_PHASE + int(seed) * GOLDEN_ANGLE, 2.0 * np.pi)
    angles = phase + 2.0 * np.pi * np.arange(n) / n
    return center + start_radius(p) * np.exp(1j * angles)
