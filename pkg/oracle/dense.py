"""
Structure-free reference computations for the Vieta system.

Everything here assembles dense matrices column by column and uses
generic linear algebra (pivoted LU), so it shares no shortcut with the
closed forms in core.vieta_system and the solvers. Agreement between the
two paths is the correctness criterion.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from config.settings import Method
from core.poly import MonicPolynomial, RootVector
from core.vieta_system import (
    DerivativeTensor,
    bilinear_apply,
    eval_F,
    eval_V,
    hessian_block_column,
    jacobian_column,
    jacobian_inverse_row,
)
from solvers.chebyshev import chebyshev_step
from solvers.weierstrass import wdk_step


DEFAULT_FD_STEP = 1e-6


class OracleError(Exception):
    """Base exception for oracle errors."""
    pass


class SingularSystemError(OracleError):
    """Raised when the assembled Jacobian is numerically singular."""
    pass


@dataclass
class DenseStepReport:
    """Closed-form step next to its generic counterpart."""
    closed_form: np.ndarray
    generic: np.ndarray
    max_relative_deviation: float


def _as_vector(x) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128).ravel()


def assemble_jacobian(x: RootVector) -> np.ndarray:
    """F'(x) from its closed-form columns."""
    x = _as_vector(x)
    return np.column_stack([jacobian_column(x, k) for k in range(x.size)])


def assemble_hessian_blocks(x: RootVector) -> np.ndarray:
    """Array of shape (n, n, n) with blocks[k][:, l] = column l of A^(k)."""
    x = _as_vector(x)
    n = x.size
    blocks = np.zeros((n, n, n), dtype=np.complex128)
    for k in range(n):
        for l in range(n):
            blocks[k, :, l] = hessian_block_column(x, k, l)
    return blocks


def assemble_tensor(x: RootVector) -> DerivativeTensor:
    """Materialize F'(x) and all A^(k)(x)."""
    return DerivativeTensor(jacobian=assemble_jacobian(x), hessian_blocks=assemble_hessian_blocks(x))


def closed_form_inverse(x: RootVector) -> np.ndarray:
    """F'(x)^-1 stacked from the closed-form rows."""
    x = _as_vector(x)
    return np.vstack([jacobian_inverse_row(x, l) for l in range(x.size)])


def _factor(J: np.ndarray):
    """Pivoted LU of J; rejects numerically singular matrices."""
    lu, piv = lu_factor(J, check_finite=True)
    diag = np.abs(np.diag(lu))
    if diag.min() == 0.0 or diag.min() <= np.finfo(float).eps * diag.max():
        raise SingularSystemError(
            f"Assembled Jacobian is singular (min |U_ii| = {diag.min():.3e})"
        )
    return lu, piv


def dense_inverse(x: RootVector) -> np.ndarray:
    """F'(x)^-1 by pivoted factorization of the assembled Jacobian."""
    x = _as_vector(x)
    factors = _factor(assemble_jacobian(x))
    return lu_solve(factors, np.eye(x.size, dtype=np.complex128))


def newton_step_generic(x: RootVector, p: MonicPolynomial) -> np.ndarray:
    """
    x - F'(x)^-1 F(x) by assembled Jacobian and pivoted solve.

    Raises:
        SingularSystemError: If the Jacobian is numerically singular
    """
    x = _as_vector(x)
    factors = _factor(assemble_jacobian(x))
    return x - lu_solve(factors, eval_F(x, p))


def chebyshev_step_generic(x: RootVector, p: MonicPolynomial) -> np.ndarray:
    """
    x - F'^-1 (F + 1/2 F''(F'^-1 F, F'^-1 F)) with assembled tensors.

    One factorization serves both right-hand sides.

    Raises:
        SingularSystemError: If the Jacobian is numerically singular
    """
    x = _as_vector(x)
    tensor = assemble_tensor(x)
    factors = _factor(tensor.jacobian)
    f = eval_F(x, p)
    d = lu_solve(factors, f)
    return x - lu_solve(factors, f + 0.5 * bilinear_apply(tensor, d, d))


def max_relative_deviation(closed: np.ndarray, generic: np.ndarray) -> float:
    """max_l |closed_l - generic_l| / (1 + |generic_l|)."""
    closed = _as_vector(closed)
    generic = _as_vector(generic)
    return float(np.max(np.abs(closed - generic) / (1.0 + np.abs(generic))))


def compare_steps(x: RootVector, p: MonicPolynomial, method: Method) -> DenseStepReport:
    """Run the closed-form and generic step of ``method`` from the same x."""
    if method == Method.CHEBYSHEV:
        closed, generic = chebyshev_step(x, p), chebyshev_step_generic(x, p)
    else:
        closed, generic = wdk_step(x, p), newton_step_generic(x, p)
    return DenseStepReport(
        closed_form=closed,
        generic=generic,
        max_relative_deviation=max_relative_deviation(closed, generic),
    )


def _fd_steps(x: np.ndarray, step: float) -> np.ndarray:
    if not step > 0:
        raise ValueError(f"Finite-difference step must be positive, got {step}")
    return step * (1.0 + np.abs(x))


def finite_difference_jacobian(x: RootVector, step: float = DEFAULT_FD_STEP) -> np.ndarray:
    """
    Central differences of V, column by column.

    The step for x_k is ``step * (1 + |x_k|)``.
    """
    x = _as_vector(x)
    n = x.size
    h = _fd_steps(x, step)
    J = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        e = np.zeros(n, dtype=np.complex128)
        e[k] = h[k]
        J[:, k] = (eval_V(x + e) - eval_V(x - e)) / (2.0 * h[k])
    return J


def finite_difference_hessian_block(x: RootVector, k: int, step: float = DEFAULT_FD_STEP) -> np.ndarray:
    """
    A^(k)(x) by central differences of the Jacobian columns in x_k.

    Column l of the result differentiates jacobian_column(., l).
    """
    x = _as_vector(x)
    n = x.size
    h = _fd_steps(x, step)[k]
    e = np.zeros(n, dtype=np.complex128)
    e[k] = h
    block = np.zeros((n, n), dtype=np.complex128)
    for l in range(n):
        block[:, l] = (jacobian_column(x + e, l) - jacobian_column(x - e, l)) / (2.0 * h)
    return block
