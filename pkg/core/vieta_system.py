"""
The Vieta system F(x) = V(x) - a and its closed-form derivative structure.

V maps a root vector to the coefficient vector of prod_j (t - x_j).
Newton's method on F is the Weierstrass-Kerner iteration; all
derivative objects below have closed forms that never need a linear
solve:

- column k of F'(x) is generated by B^(k)(t) = -prod_{j != k}(t - x_j)
- row l of F'(x)^-1 is (1, x_l, ..., x_l^(n-1)) / B^(l)(x_l)
- column l of the Hessian block A^(k)(x) is generated by
  B^(lk)(t) = prod_{v not in {l, k}}(t - x_v), and is zero for l == k

Generating polynomials are stored as ascending coefficient vectors of
length n. Indices are 0-based.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .poly import MonicPolynomial, RootVector, PolynomialError, find_collision, eval_poly


DEFAULT_COLLISION_EPS = 1e-12


class VietaSystemError(Exception):
    """Base exception for Vieta system errors."""
    pass


class SingularJacobianError(VietaSystemError):
    """Raised when two entries of x coincide, making F'(x) singular."""

    def __init__(self, i: int, j: int, separation: float):
        self.i = i
        self.j = j
        self.separation = separation
        super().__init__(
            f"Entries {i} and {j} coincide (|x_i - x_j| = {separation:.3e}); "
            "F'(x) is singular"
        )


@dataclass(frozen=True, eq=False)
class DerivativeTensor:
    """
    Dense first and second derivative of F at a point.

    Attributes:
        jacobian: n x n matrix F'(x)
        hessian_blocks: n x n x n array, hessian_blocks[k] = A^(k)(x)
    """
    jacobian: np.ndarray
    hessian_blocks: np.ndarray

    @property
    def n(self) -> int:
        return int(self.jacobian.shape[0])

    def premultiply(self, B: np.ndarray) -> "DerivativeTensor":
        """Tensor with jacobian B F' and blocks B A^(k)."""
        B = np.asarray(B, dtype=np.complex128)
        return DerivativeTensor(
            jacobian=B @ self.jacobian,
            hessian_blocks=np.einsum("ij,kjl->kil", B, self.hessian_blocks),
        )


def _as_vector(x) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128).ravel()


def ensure_distinct(x: RootVector, collision_eps: float = DEFAULT_COLLISION_EPS):
    """Raise SingularJacobianError if two entries are closer than the collision floor."""
    hit = find_collision(x, collision_eps)
    if hit is not None:
        raise SingularJacobianError(*hit)


def eval_V(x: RootVector) -> np.ndarray:
    """V(x): coefficients (b_0, ..., b_{n-1}) of prod_j (t - x_j)."""
    x = _as_vector(x)
    return P.polyfromroots(x).astype(np.complex128)[:-1]


def eval_F(x: RootVector, a) -> np.ndarray:
    """F(x) = V(x) - a."""
    x = _as_vector(x)
    a = _as_vector(a.coeffs if isinstance(a, MonicPolynomial) else a)
    if a.size != x.size:
        raise PolynomialError(f"Length mismatch: x has {x.size}, a has {a.size}")
    return eval_V(x) - a


def jacobian_column(x: RootVector, k: int) -> np.ndarray:
    """
    Column k of F'(x).

    Entries are the negated elementary symmetric sums of x without x_k;
    the last entry is always -1.
    """
    x = _as_vector(x)
    if not 0 <= k < x.size:
        raise PolynomialError(f"Index k={k} out of range for n={x.size}")
    return -P.polyfromroots(np.delete(x, k)).astype(np.complex128)


def jacobian_inverse_row(
    x: RootVector,
    l: int,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """
    Row l of F'(x)^-1 in closed form.

    Raises:
        SingularJacobianError: If entries of x collide
    """
    x = _as_vector(x)
    if not 0 <= l < x.size:
        raise PolynomialError(f"Index l={l} out of range for n={x.size}")
    ensure_distinct(x, collision_eps)
    b_l = -np.prod(x[l] - np.delete(x, l))
    return np.power(x[l], np.arange(x.size)) / b_l


def hessian_block_column(x: RootVector, k: int, l: int) -> np.ndarray:
    """
    Column l of A^(k)(x); the zero vector when l == k.

    The result is symmetric in (k, l) bit for bit, since both orders
    expand the same reduced root set.
    """
    x = _as_vector(x)
    n = x.size
    if not (0 <= k < n and 0 <= l < n):
        raise PolynomialError(f"Indices k={k}, l={l} out of range for n={n}")
    if k == l:
        return np.zeros(n, dtype=np.complex128)
    c = P.polyfromroots(np.delete(x, [k, l])).astype(np.complex128)
    return np.append(c, 0j)


def bilinear_apply(tensor: DerivativeTensor, y, z) -> np.ndarray:
    """F''(x)(y, z): component i is sum_k (sum_j a^(k)_ij y_j) z_k."""
    y = _as_vector(y)
    z = _as_vector(z)
    if y.size != tensor.n or z.size != tensor.n:
        raise PolynomialError("Direction vectors must have length n")
    return np.einsum("kij,j,k->i", tensor.hessian_blocks, y, z)


def inverse_times_hessian_block(
    x: RootVector,
    k: int,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """
    F'(x)^-1 A^(k)(x) assembled from its closed form.

    Nonzero entries: (j, j) = 1/(x_k - x_j) and (k, j) = 1/(x_j - x_k)
    for j != k. Every other entry, including (k, k), is exactly zero.
    """
    x = _as_vector(x)
    n = x.size
    if not 0 <= k < n:
        raise PolynomialError(f"Index k={k} out of range for n={n}")
    ensure_distinct(x, collision_eps)

    others = np.delete(np.arange(n), k)
    M = np.zeros((n, n), dtype=np.complex128)
    M[others, others] = 1.0 / (x[k] - x[others])
    M[k, others] = 1.0 / (x[others] - x[k])
    return M


def weierstrass_quotients(
    x: RootVector,
    p: MonicPolynomial,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """
    W_l = p(x_l) / B^(l)(x_l) = -p(x_l) / prod_{j != l}(x_l - x_j).

    The differences are sorted before multiplying, so permuting x
    permutes W exactly.
    """
    x = _as_vector(x)
    if x.size != p.degree:
        raise PolynomialError(f"Length mismatch: x has {x.size}, degree is {p.degree}")
    ensure_distinct(x, collision_eps)

    diffs = x[:, None] - x[None, :]
    np.fill_diagonal(diffs, 1.0)
    denominators = np.prod(np.sort(diffs, axis=1), axis=1)
    return -eval_poly(p, x) / denominators


def newton_direction(
    x: RootVector,
    p: MonicPolynomial,
    collision_eps: float = DEFAULT_COLLISION_EPS
) -> np.ndarray:
    """F'(x)^-1 F(x) in closed form: component l is -p(x_l)/B^(l)(x_l)."""
    return -weierstrass_quotients(x, p, collision_eps)


def generating_value(column: np.ndarray, t) -> complex:
    """(1, t, ..., t^(n-1)) . column."""
    return complex(P.polyval(t, np.asarray(column, dtype=np.complex128)))
