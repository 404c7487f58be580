"""
Tests for monic polynomials, deflated products and separations.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from config.settings import Method, SolverConfig
from core.poly import (
    MonicPolynomial,
    PolynomialError,
    as_root_vector,
    deflated_product,
    elementary_symmetric_by_subsets,
    eval_poly,
    find_collision,
    from_roots,
    min_pairwise_separation,
    pairwise_deflated_product,
)
from solvers import solve

from .conftest import SQRT2, SQRT3

small_complex = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
roots_with_permutation = st.lists(small_complex, min_size=1, max_size=6).flatmap(
    lambda roots: st.tuples(st.just(roots), st.permutations(roots))
)


def product_bound(x, t):
    return 1.0 + float(np.prod(abs(t) + np.abs(np.asarray(x))))


class TestMonicPolynomial:
    def test_degree_and_full_coeffs(self, quartic):
        assert quartic.degree == 4
        assert_allclose(quartic.full_coeffs(), [6, 0, -5, 0, 1])

    def test_rejects_empty(self):
        with pytest.raises(PolynomialError):
            MonicPolynomial.from_sequence([])

    def test_rejects_non_finite(self):
        with pytest.raises(PolynomialError):
            MonicPolynomial.from_sequence([1.0, np.nan])

    def test_coefficients_are_read_only(self, quartic):
        with pytest.raises(ValueError):
            quartic.coeffs[0] = 1.0

    def test_equality_and_hash(self):
        a = MonicPolynomial.from_sequence([1, 2])
        b = MonicPolynomial.from_sequence([1.0, 2.0 + 0j])
        assert a == b
        assert hash(a) == hash(b)
        assert a != MonicPolynomial.from_sequence([1, 3])


class TestEval:
    def test_at_root(self, quartic):
        assert abs(eval_poly(quartic, SQRT2)) < 1e-14

    def test_constant_term(self, quartic):
        assert eval_poly(quartic, 0) == 6

    def test_hand_value(self, quartic):
        assert eval_poly(quartic, 1.2) == pytest.approx(0.8736, abs=1e-14)

    def test_call_matches_eval(self, quartic):
        t = np.array([0.3 + 1j, -2.0])
        assert_allclose(quartic(t), eval_poly(quartic, t))

    @given(st.lists(small_complex, min_size=1, max_size=6), small_complex)
    @settings(max_examples=60, deadline=None)
    def test_horner_matches_power_sum(self, coeffs, t):
        p = MonicPolynomial.from_sequence(coeffs)
        expected = sum(c * t ** j for j, c in enumerate(coeffs)) + t ** len(coeffs)
        assert abs(eval_poly(p, t) - expected) <= 1e-10 * (1 + abs(expected))


class TestFromRoots:
    def test_quartic(self):
        p = from_roots([SQRT2, -SQRT2, SQRT3, -SQRT3])
        assert_allclose(p.coeffs, [6, 0, -5, 0], atol=1e-13)

    def test_zero_roots(self):
        p = from_roots([0, 0, 0])
        assert np.all(p.coeffs == 0)

    def test_two_roots(self):
        assert_allclose(from_roots([1, 2]).coeffs, [2, -3])

    def test_roots_evaluate_to_zero(self, rng):
        x = rng.normal(size=5) + 1j * rng.normal(size=5)
        p = from_roots(x)
        assert np.max(np.abs(eval_poly(p, x))) < 1e-12

    @given(st.lists(small_complex, min_size=1, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_matches_subset_sums(self, roots):
        p = from_roots(roots)
        n = len(roots)
        for k in range(1, n + 1):
            expected = elementary_symmetric_by_subsets(roots, k)
            assert abs(p.coeffs[n - k] - expected) <= 1e-10 * (1 + abs(expected))

    @given(roots_with_permutation)
    @settings(max_examples=40, deadline=None)
    def test_invariant_under_root_permutation(self, roots_and_perm):
        roots, permuted = roots_and_perm
        assert_allclose(
            from_roots(permuted).coeffs,
            from_roots(roots).coeffs,
            rtol=1e-12,
            atol=1e-12 * product_bound(roots, 1.0),
        )

    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2 ** 16))
    @settings(max_examples=40, deadline=None)
    def test_solver_round_trip(self, n, seed):
        # Well-separated roots near a circle, start within a quarter separation
        rng = np.random.default_rng(seed)
        angles = 2 * np.pi * (np.arange(n) + rng.uniform(-0.2, 0.2, n)) / n
        roots = rng.uniform(1.0, 1.5, n) * np.exp(1j * angles)
        offset = 0.25 * min_pairwise_separation(roots) if n > 1 else 0.5
        start = roots + offset * rng.uniform(0.1, 0.9, n) * np.exp(2j * np.pi * rng.uniform(size=n))
        for method in (Method.WEIERSTRASS_KERNER, Method.CHEBYSHEV):
            result = solve(from_roots(roots), start, SolverConfig(method=method, tol=1e-12))
            assert result.converged
            distances = np.abs(result.roots[:, None] - roots[None, :])
            nearest = np.argmin(distances, axis=1)
            assert sorted(nearest) == list(range(n))
            assert np.max(np.min(distances, axis=1)) < 1e-10


class TestDeflatedProducts:
    def test_deflated_product_hand_values(self):
        assert deflated_product([1, 2], 0, 0) == 2
        assert deflated_product([1, 2], 0, 1) == 1

    def test_deflated_product_degree_one(self):
        assert deflated_product([3.5], 0, 10) == -1

    def test_pairwise_empty_product(self):
        assert pairwise_deflated_product([1, 2], 0, 1, 7.0) == 1

    def test_pairwise_hand_values(self):
        assert pairwise_deflated_product([1, 2, 3], 0, 1, 0) == -3
        assert pairwise_deflated_product([1, 2, 3, 4], 0, 1, 0) == 12

    def test_pairwise_rejects_equal_indices(self):
        with pytest.raises(PolynomialError):
            pairwise_deflated_product([1, 2, 3], 1, 1, 0)

    def test_index_out_of_range(self):
        with pytest.raises(PolynomialError):
            deflated_product([1, 2], 2, 0)

    @given(st.lists(small_complex, min_size=1, max_size=6), small_complex, st.data())
    @settings(max_examples=60, deadline=None)
    def test_deflated_product_restores_polynomial(self, roots, t, data):
        k = data.draw(st.integers(min_value=0, max_value=len(roots) - 1))
        lhs = deflated_product(roots, k, t) * (t - roots[k])
        rhs = -eval_poly(from_roots(roots), t)
        assert abs(lhs - rhs) <= 1e-11 * product_bound(roots, t)

    @given(st.lists(small_complex, min_size=2, max_size=6), small_complex, st.data())
    @settings(max_examples=60, deadline=None)
    def test_pairwise_product_restores_full_product(self, roots, t, data):
        n = len(roots)
        l = data.draw(st.integers(min_value=0, max_value=n - 1))
        k = data.draw(st.integers(min_value=0, max_value=n - 1).filter(lambda v: v != l))
        lhs = pairwise_deflated_product(roots, l, k, t) * (t - roots[l]) * (t - roots[k])
        rhs = np.prod(t - np.asarray(roots, dtype=np.complex128))
        assert abs(lhs - rhs) <= 1e-12 * product_bound(roots, t)


class TestSeparation:
    def test_real_start(self, real_start):
        assert min_pairwise_separation(real_start) == pytest.approx(0.6)

    def test_duplicates(self):
        assert min_pairwise_separation([5, 5]) == 0

    def test_imaginary_axis(self):
        assert min_pairwise_separation([0, 3j]) == pytest.approx(3.0)

    def test_single_entry(self):
        assert min_pairwise_separation([1.0]) == float("inf")

    def test_find_collision(self):
        assert find_collision([5, 1, 5], 1e-12) == (0, 2, 0.0)
        assert find_collision([1, 2, 3], 1e-12) is None
        assert find_collision([1.0], 1e-12) is None

    def test_collision_floor_is_relative(self):
        x = [1e6, 1e6 + 1e-7]
        assert find_collision(x, 1e-12) is not None
        assert find_collision([1.0, 1.0 + 1e-7], 1e-12) is None


class TestRootVector:
    def test_read_only_copy(self):
        x = as_root_vector([1, 2])
        assert x.dtype == np.complex128
        with pytest.raises(ValueError):
            x[0] = 3

    def test_rejects_empty_and_non_finite(self):
        with pytest.raises(PolynomialError):
            as_root_vector([])
        with pytest.raises(PolynomialError):
            as_root_vector([1, np.inf])
