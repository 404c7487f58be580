"""
Core module for the simultaneous root finder.

This module contains the mathematical layer:
- Monic polynomials, Vieta expansion and deflated products
- The Vieta system F(x) = V(x) - a and its closed-form derivatives
"""

from .poly import (
    MonicPolynomial,
    PolynomialError,
    as_root_vector,
    eval_poly,
    from_roots,
    deflated_product,
    pairwise_deflated_product,
    min_pairwise_separation,
    find_collision,
)
from .vieta_system import (
    DerivativeTensor,
    VietaSystemError,
    SingularJacobianError,
    eval_V,
    eval_F,
    jacobian_column,
    jacobian_inverse_row,
    hessian_block_column,
    bilinear_apply,
    inverse_times_hessian_block,
    weierstrass_quotients,
    newton_direction,
)

__all__ = [
    'MonicPolynomial',
    'PolynomialError',
    'as_root_vector',
    'eval_poly',
    'from_roots',
    'deflated_product',
    'pairwise_deflated_product',
    'min_pairwise_separation',
    'find_collision',
    'DerivativeTensor',
    'VietaSystemError',
    'SingularJacobianError',
    'eval_V',
    'eval_F',
    'jacobian_column',
    'jacobian_inverse_row',
    'hessian_block_column',
    'bilinear_apply',
    'inverse_times_hessian_block',
    'weierstrass_quotients',
    'newton_direction',
]
