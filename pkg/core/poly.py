"""
Monic polynomials and the deflated products built from a root vector.

A degree-n monic polynomial is stored by its lower coefficients
(a_0, ..., a_{n-1}); the leading coefficient 1 is implied. Root vectors
are plain complex numpy arrays of length n.

Indices are 0-based throughout.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P


Number = Union[complex, float, int]
RootVector = np.ndarray


class PolynomialError(ValueError):
    """Raised for malformed polynomials, root vectors or indices."""
    pass


def as_root_vector(values: Iterable[Number]) -> RootVector:
    """Copy ``values`` into a 1-d complex128 array."""
    x = np.array(list(values) if not isinstance(values, np.ndarray) else values,
                 dtype=np.complex128).ravel()
    if x.size == 0:
        raise PolynomialError("Root vector must not be empty")
    if not np.all(np.isfinite(x)):
        raise PolynomialError("Root vector contains non-finite entries")
    x.setflags(write=False)
    return x


@dataclass(frozen=True, eq=False)
class MonicPolynomial:
    """
    Monic polynomial t^n + a_{n-1} t^{n-1} + ... + a_0.

    Attributes:
        coeffs: Read-only complex array (a_0, ..., a_{n-1})
    """
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size < 1:
            raise PolynomialError("A monic polynomial needs degree >= 1")
        if not np.all(np.isfinite(c)):
            raise PolynomialError("Coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_sequence(cls, coeffs: Sequence[Number]) -> "MonicPolynomial":
        """Build from a_0 first, ascending powers, leading 1 omitted."""
        return cls(np.asarray(list(coeffs), dtype=np.complex128))

    @property
    def degree(self) -> int:
        return int(self.coeffs.size)

    def full_coeffs(self) -> np.ndarray:
        """Ascending coefficients including the implied leading 1."""
        return np.append(self.coeffs, 1.0 + 0j)

    def __call__(self, t):
        return eval_poly(self, t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonicPolynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        return f"MonicPolynomial(degree={self.degree}, coeffs={self.coeffs.tolist()})"


def eval_poly(p: MonicPolynomial, t):
    """
    Evaluate p at t (scalar or array) with Horner's scheme.

    Args:
        p: Monic polynomial
        t: Evaluation point(s)

    Returns:
        p(t), same shape as t
    """
    return P.polyval(t, p.full_coeffs())


def from_roots(roots: Iterable[Number]) -> MonicPolynomial:
    """
    Expand prod_j (t - x_j) into a monic polynomial.

    Uses repeated multiplication by linear factors rather than the
    k-subset sums of Vieta's formulas; both give the same coefficients.
    """
    x = as_root_vector(roots)
    full = P.polyfromroots(x).astype(np.complex128)
    return MonicPolynomial(full[:-1])


def elementary_symmetric_by_subsets(roots: Iterable[Number], k: int) -> complex:
    """
    Coefficient a_{n-k} as the literal sum over k-subsets of prod(-x_i).

    Exponential in n. Only meant as a reference for small n.
    """
    x = as_root_vector(roots)
    if not 0 <= k <= x.size:
        raise PolynomialError(f"k must lie in [0, {x.size}], got {k}")
    total = 0j
    for subset in combinations(range(x.size), k):
        term = 1 + 0j
        for i in subset:
            term *= -x[i]
        total += term
    return complex(total)


def _check_index(n: int, k: int, name: str = "k"):
    if not 0 <= k < n:
        raise PolynomialError(f"Index {name}={k} out of range for n={n}")


def deflated_product(x: RootVector, k: int, t: Number) -> complex:
    """
    B^(k)(t) = -prod_{j != k} (t - x_j).

    For n = 1 the empty product gives -1.
    """
    x = np.asarray(x, dtype=np.complex128)
    _check_index(x.size, k)
    return complex(-np.prod(t - np.delete(x, k)))


def pairwise_deflated_product(x: RootVector, l: int, k: int, t: Number) -> complex:
    """
    B^(lk)(t) = prod_{v not in {l, k}} (t - x_v).

    For n = 2 the empty product gives 1.

    Raises:
        PolynomialError: If l == k (that Hessian column is the zero vector)
    """
    x = np.asarray(x, dtype=np.complex128)
    _check_index(x.size, l, "l")
    _check_index(x.size, k)
    if l == k:
        raise PolynomialError("pairwise_deflated_product needs l != k")
    return complex(np.prod(t - np.delete(x, [l, k])))


def _distance_matrix(x: np.ndarray) -> np.ndarray:
    d = np.abs(x[:, None] - x[None, :])
    np.fill_diagonal(d, np.inf)
    return d


def min_pairwise_separation(x: RootVector) -> float:
    """min_{i<j} |x_i - x_j|; +inf when n = 1."""
    x = np.asarray(x, dtype=np.complex128).ravel()
    if x.size < 2:
        return float("inf")
    return float(_distance_matrix(x).min())


def find_collision(x: RootVector, eps: float) -> Optional[Tuple[int, int, float]]:
    """
    Find a pair closer than eps * (1 + max|x_i|).

    Returns:
        (i, j, separation) with i < j, or None
    """
    x = np.asarray(x, dtype=np.complex128).ravel()
    if x.size < 2:
        return None
    d = _distance_matrix(x)
    threshold = eps * (1.0 + float(np.max(np.abs(x))))
    flat = int(np.argmin(d))
    i, j = divmod(flat, x.size)
    sep = float(d[i, j])
    if sep < threshold or sep == 0.0:
        return (min(i, j), max(i, j), sep)
    return None
