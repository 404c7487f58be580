"""
Tests for the dense reference computations and the randomized suites.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from config.settings import Method, OracleSettings
from core.poly import MonicPolynomial, min_pairwise_separation
from core.vieta_system import jacobian_column
from oracle import (
    SingularSystemError,
    assemble_hessian_blocks,
    assemble_jacobian,
    chebyshev_step_generic,
    closed_form_inverse,
    compare_steps,
    dense_inverse,
    finite_difference_hessian_block,
    finite_difference_jacobian,
    max_relative_deviation,
    newton_step_generic,
    random_instance,
    run_check_suites,
)

X4 = np.array([1, 2, 3, 4], dtype=np.complex128)


class TestDense:
    def test_generic_steps_fix_exact_roots(self):
        x = np.array([-1, 2, 4], dtype=np.complex128)
        p = MonicPolynomial.from_sequence([8, 2, -5])  # (t + 1)(t - 2)(t - 4)
        assert_allclose(newton_step_generic(x, p), x, atol=1e-14)
        assert_allclose(chebyshev_step_generic(x, p), x, atol=1e-14)

    def test_dense_inverse_singular(self):
        with pytest.raises(SingularSystemError):
            dense_inverse([5, 5])

    def test_inverse_paths_agree(self, rng):
        _, _, x = random_instance(rng, 6)
        assert_allclose(closed_form_inverse(x), dense_inverse(x), atol=1e-9)

    def test_max_relative_deviation(self):
        assert max_relative_deviation([1.0, 2.0], [1.0, 2.0]) == 0.0
        assert max_relative_deviation([2.0], [1.0]) == pytest.approx(0.5)

    def test_compare_steps_report(self, quartic, real_start):
        report = compare_steps(real_start, quartic, Method.CHEBYSHEV)
        assert report.closed_form.shape == (4,)
        assert report.max_relative_deviation < 1e-10

    def test_equivalence_over_many_instances(self):
        rng = np.random.default_rng(99)
        worst_step = worst_inverse = 0.0
        for trial in range(1000):
            n = 2 + trial % 7
            _, p, x = random_instance(rng, n)
            for method in (Method.WEIERSTRASS_KERNER, Method.CHEBYSHEV):
                worst_step = max(worst_step, compare_steps(x, p, method).max_relative_deviation)
            worst_inverse = max(worst_inverse, float(np.max(np.abs(closed_form_inverse(x) - dense_inverse(x)))))
        assert worst_step < 1e-9
        assert worst_inverse < 1e-9


class TestFiniteDifferences:
    def test_jacobian_column_hand_values(self):
        J = finite_difference_jacobian(X4)
        assert_allclose(J[:, 0], [24, -26, 9, -1], rtol=1e-6, atol=1e-6)

    def test_degree_one(self):
        assert_allclose(finite_difference_jacobian([2.5]), [[-1]], atol=1e-9)

    def test_jacobian_matches_assembly(self, rng):
        x = rng.normal(size=5) + 1j * rng.normal(size=5)
        J = assemble_jacobian(x)
        fd = finite_difference_jacobian(x)
        assert np.max(np.abs(fd - J)) <= 1e-6 * (1 + np.max(np.abs(J)))

    def test_hessian_block_pattern(self):
        block = finite_difference_hessian_block(X4, 0)
        assert_allclose(block[-1, :], 0, atol=1e-8)
        assert_array_equal(block[:, 0], np.zeros(4))

    def test_hessian_matches_assembly(self, rng):
        x = rng.normal(size=5) + 1j * rng.normal(size=5)
        blocks = assemble_hessian_blocks(x)
        for k in range(5):
            fd = finite_difference_hessian_block(x, k)
            assert np.max(np.abs(fd - blocks[k])) <= 1e-5 * (1 + np.max(np.abs(blocks[k])))

    def test_rejects_bad_step(self):
        with pytest.raises(ValueError):
            finite_difference_jacobian(X4, step=0.0)

    def test_hessian_differentiates_jacobian_columns(self):
        # Column 1 of A^(0) is d/dx_0 of Jacobian column 1
        h = 1e-6
        e = np.array([h, 0, 0, 0])
        expected = (jacobian_column(X4 + e, 1) - jacobian_column(X4 - e, 1)) / (2 * h)
        assert_allclose(finite_difference_hessian_block(X4, 0, step=h / 2)[:, 1], expected, rtol=1e-6)


class TestRandomInstance:
    def test_perturbation_bounded(self, rng):
        for n in range(1, 9):
            roots, p, x = random_instance(rng, n, max_perturbation=0.3)
            cap = min(0.3, min_pairwise_separation(roots) / 4)
            assert np.max(np.abs(x - roots)) <= cap + 1e-15
            assert p.degree == n
            assert np.all(np.abs(roots) <= 1.0)

    def test_reproducible(self):
        a = random_instance(np.random.default_rng(5), 4)
        b = random_instance(np.random.default_rng(5), 4)
        assert_array_equal(a[2], b[2])


class TestSuites:
    def test_degree_six(self):
        reports = run_check_suites(6, 100, seed=0)
        failed = [(r.name, r.max_deviation) for r in reports if not r.passed]
        assert not failed
        assert all(r.trials == 100 for r in reports)

    def test_degree_one(self):
        reports = run_check_suites(1, 1, seed=0)
        assert all(r.passed for r in reports)

    def test_deterministic_across_job_counts(self):
        serial = run_check_suites(4, 12, seed=7, settings=OracleSettings(n_jobs=1))
        threaded = run_check_suites(4, 12, seed=7, settings=OracleSettings(n_jobs=3))
        assert [r.max_deviation for r in serial] == [r.max_deviation for r in threaded]

    def test_failing_tolerance(self, quiet_logger):
        reports = run_check_suites(3, 2, seed=1, settings=OracleSettings(fd_jacobian_tolerance=0.0), logger=quiet_logger)
        by_name = {r.name: r for r in reports}
        assert not by_name["fd_jacobian"].passed
        assert any("fd_jacobian" in m for m in quiet_logger.get_messages())

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            run_check_suites(0, 1)
        with pytest.raises(ValueError):
            run_check_suites(3, 0)
