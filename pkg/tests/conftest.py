"""
Shared fixtures: the worked quartic and the quintuple-root polynomial.
"""

import numpy as np
import pytest

from core.poly import MonicPolynomial
from utils.logging import Logger

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)


@pytest.fixture
def quartic():
    """p(t) = t^4 - 5t^2 + 6 with roots +-sqrt(2), +-sqrt(3)."""
    return MonicPolynomial.from_sequence([6, 0, -5, 0])


@pytest.fixture
def quartic_roots():
    return np.array([SQRT2, -SQRT2, SQRT3, -SQRT3], dtype=np.complex128)


@pytest.fixture
def real_start():
    return np.array([1.2, 1.8, -1.2, -1.8], dtype=np.complex128)


@pytest.fixture
def complex_start():
    return np.array([1 + 1j, 20 + 30j, 30 + 50j, -40 + 30j], dtype=np.complex128)


@pytest.fixture
def quintuple():
    """(t + 1)^5."""
    return MonicPolynomial.from_sequence([1, 5, 10, 10, 5])


@pytest.fixture
def quintuple_start():
    return np.array([1, 2, 3, 4, 5], dtype=np.complex128)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def quiet_logger():
    """Logger that keeps messages in memory only."""
    import io
    return Logger(min_level="DEBUG", stream=io.StringIO())
