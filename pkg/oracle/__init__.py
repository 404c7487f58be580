"""
Reference computations for cross-checking the closed forms.

- Dense assembly of F', A^(k) and generic pivoted solves
- Finite-difference derivatives
- Randomized check suites
"""

from .dense import (
    OracleError,
    SingularSystemError,
    DenseStepReport,
    assemble_jacobian,
    assemble_hessian_blocks,
    assemble_tensor,
    closed_form_inverse,
    dense_inverse,
    newton_step_generic,
    chebyshev_step_generic,
    max_relative_deviation,
    compare_steps,
    finite_difference_jacobian,
    finite_difference_hessian_block,
)
from .suites import SuiteReport, random_instance, run_check_suites

__all__ = [
    'OracleError',
    'SingularSystemError',
    'DenseStepReport',
    'assemble_jacobian',
    'assemble_hessian_blocks',
    'assemble_tensor',
    'closed_form_inverse',
    'dense_inverse',
    'newton_step_generic',
    'chebyshev_step_generic',
    'max_relative_deviation',
    'compare_steps',
    'finite_difference_jacobian',
    'finite_difference_hessian_block',
    'SuiteReport',
    'random_instance',
    'run_check_suites',
]
