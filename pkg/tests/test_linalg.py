"""Kernel tests: eigendecomposition, PSD factors, and the numerical radius."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semihilbert import linalg
from semihilbert.errors import NotHermitian, NotPSD, NotSquare

from .conftest import A_REF, random_hermitian, random_psd

GOLDEN_EIGS = ((3 + math.sqrt(5)) / 2, (3 - math.sqrt(5)) / 2)


class TestHermEig:
    def test_reference_eigenvalues_descending(self):
        dec = linalg.herm_eig(A_REF)
        assert dec.eigenvalues == pytest.approx(GOLDEN_EIGS, abs=1e-12)

    def test_eigenvectors_orthonormal_and_reconstruct(self, rng):
        M = random_hermitian(rng, 6)
        dec = linalg.herm_eig(M)
        V = dec.eigenvectors
        assert np.allclose(V.conj().T @ V, np.eye(6), atol=1e-12)
        assert np.allclose((V * dec.eigenvalues) @ V.conj().T, M, atol=1e-10)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            linalg.herm_eig([[0.0, 1.0], [0.0, 0.0]])

    def test_rejects_non_square(self):
        with pytest.raises(NotSquare):
            linalg.herm_eig(np.zeros((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            linalg.herm_eig([[np.nan, 0.0], [0.0, 1.0]])


class TestPsdFactors:
    def test_pinv_of_reference(self):
        assert np.allclose(linalg.pinv_psd(A_REF), [[2.0, 1.0], [1.0, 1.0]], atol=1e-12)

    def test_sqrt_squares_back(self, rng):
        A = random_psd(rng, 5)
        R = linalg.psd_sqrt(A)
        assert np.allclose(R @ R, A, atol=1e-9 * max(1.0, np.linalg.norm(A, 2)))
        assert np.allclose(R, R.conj().T, atol=1e-12)

    def test_pinv_penrose_conditions_singular(self, rng):
        A = random_psd(rng, 6, rank=3)
        P = linalg.pinv_psd(A)
        scale = np.linalg.norm(A, 2)
        assert np.allclose(A @ P @ A, A, atol=1e-9 * scale)
        assert np.allclose(P @ A @ P, P, atol=1e-9 * max(1.0, np.linalg.norm(P, 2)))
        assert np.allclose(A @ P, (A @ P).conj().T, atol=1e-10)

    def test_rank_and_projection(self, rng):
        A = random_psd(rng, 6, rank=4)
        assert linalg.psd_rank(A) == 4
        P = linalg.proj_range(A)
        assert np.allclose(P @ P, P, atol=1e-11)
        assert np.allclose(P, P.conj().T, atol=1e-12)
        assert np.allclose(P @ A, A, atol=1e-9 * np.linalg.norm(A, 2))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            linalg.psd_sqrt(np.diag([1.0, -1.0]))

    def test_clamps_tiny_negative(self):
        A = np.diag([1.0, -1e-14])
        R = linalg.psd_sqrt(A)  # inside the clamping window
        assert R[1, 1] == 0.0


class TestNumericalRadius:
    def test_nilpotent_half(self):
        assert linalg.numerical_radius([[0.0, 1.0], [0.0, 0.0]]) == pytest.approx(0.5, abs=1e-10)

    def test_hermitian_equals_spectral_norm(self, rng):
        M = random_hermitian(rng, 5)
        assert linalg.numerical_radius(M) == pytest.approx(np.linalg.norm(M, 2), rel=1e-10)

    def test_negative_eigenvalue_dominates(self):
        # Requires sweeping the full circle, not a half period.
        assert linalg.numerical_radius(np.diag([1.0, -3.0])) == pytest.approx(3.0, abs=1e-10)

    def test_normal_matrix_spectral_radius(self, rng):
        M = np.diag([1.0 + 2.0j, -0.5, 0.25j])
        assert linalg.numerical_radius(M) == pytest.approx(abs(1.0 + 2.0j), rel=1e-10)

    def test_phase_invariance(self, rng):
        M = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        w = linalg.numerical_radius(M)
        assert linalg.numerical_radius(np.exp(0.7j) * M) == pytest.approx(w, rel=1e-9)

    def test_agrees_with_grid_oracle(self, rng):
        for n in (2, 3, 4):
            M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            w = linalg.numerical_radius(M)
            g = linalg.numerical_radius_grid(M, points=20_000)
            assert w == pytest.approx(g, rel=1e-7)
            assert w >= g - 1e-10  # the coarse grid can only undershoot

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=10_000))
    def test_radius_norm_sandwich(self, n, seed):
        rng = np.random.default_rng(seed)
        M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        w = linalg.numerical_radius(M)
        nrm = linalg.spectral_norm(M)
        tol = 1e-9 * max(1.0, nrm)
        assert 0.5 * nrm - tol <= w <= nrm + tol

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_radius_subadditive(self, seed):
        rng = np.random.default_rng(seed)
        M = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        N = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        lhs = linalg.numerical_radius(M + N)
        rhs = linalg.numerical_radius(M) + linalg.numerical_radius(N)
        assert lhs <= rhs + 1e-9 * max(1.0, rhs)
