"""A-adjoints, membership tests, seminorm/radius, and A-positive powers."""

import math

import numpy as np
import pytest

from semihilbert.aops import (
    AOperator,
    a_adjoint,
    a_numerical_radius,
    a_op_norm,
    a_positive_power,
    in_b_a,
    in_b_a_half,
    is_a_positive,
    is_a_selfadjoint,
    oracle_a_numrad_sample,
    reduced_matrix,
)
from semihilbert.errors import (
    DimensionMismatch,
    NotAPositive,
    NotInBA,
    NotInBAHalf,
    NotSupportedOnRange,
)
from semihilbert.space import make_space, random_operator_in_BA, random_space

from .conftest import A_REF, T_LOWER


class TestAdjoint:
    def test_reference_adjoint(self, ref_space):
        expected = np.array([[-1.0, 4.0], [-1.0, 3.0]])
        assert np.allclose(a_adjoint(ref_space, T_LOWER), expected, atol=1e-12)

    def test_defining_identity(self, ref_space):
        Tadj = a_adjoint(ref_space, T_LOWER)
        assert np.allclose(ref_space.A @ Tadj, T_LOWER.conj().T @ ref_space.A, atol=1e-12)

    def test_double_adjoint_projects(self):
        sp = random_space(4, seed=5, singular_prob=1.0)
        T = random_operator_in_BA(sp, seed=6)
        P = sp.projA
        assert np.allclose(a_adjoint(sp, a_adjoint(sp, T)), P @ T @ P, atol=1e-9)

    def test_product_rule(self):
        sp = random_space(4, seed=8, singular_prob=1.0)
        T = random_operator_in_BA(sp, seed=9)
        S = random_operator_in_BA(sp, seed=10)
        lhs = a_adjoint(sp, T @ S)
        rhs = a_adjoint(sp, S) @ a_adjoint(sp, T)
        assert np.allclose(lhs, rhs, atol=1e-8 * max(1.0, np.linalg.norm(rhs, 2)))

    def test_rejects_outside_b_a(self):
        sp = make_space(np.diag([1.0, 0.0]))
        T = np.array([[0.0, 1.0], [0.0, 0.0]])  # maps ker(A) into ran(A)*
        assert not in_b_a(sp, T)
        with pytest.raises(NotInBA):
            a_adjoint(sp, T)

    def test_dimension_check(self, ref_space):
        with pytest.raises(DimensionMismatch):
            a_adjoint(ref_space, np.eye(3))


class TestMembership:
    def test_invertible_weight_everything_member(self, ref_space, rng):
        T = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert in_b_a(ref_space, T)
        assert in_b_a_half(ref_space, T)

    def test_b_a_subset_of_b_a_half(self):
        for seed in range(15):
            sp = random_space(4, seed=seed, singular_prob=1.0)
            T = random_operator_in_BA(sp, seed=seed + 50)
            assert in_b_a(sp, T)
            assert in_b_a_half(sp, T)

    def test_shift_off_kernel_breaks_both(self):
        sp = make_space(np.diag([1.0, 0.0]))
        T = np.array([[0.0, 1.0], [0.0, 0.0]])
        assert not in_b_a_half(sp, T)
        assert a_numerical_radius(sp, T).value == math.inf
        assert a_op_norm(sp, T).value == math.inf
        with pytest.raises(NotInBAHalf):
            reduced_matrix(sp, T)


class TestSeminormRadius:
    def test_identity_is_unit(self):
        sp = make_space(np.diag([2.0, 0.5, 0.0]))
        assert a_op_norm(sp, np.eye(3)).value == pytest.approx(1.0, abs=1e-10)
        assert a_numerical_radius(sp, np.eye(3)).value == pytest.approx(1.0, abs=1e-10)

    def test_classical_limit(self, rng):
        sp = make_space(np.eye(3))
        T = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert a_op_norm(sp, T).value == pytest.approx(np.linalg.norm(T, 2), rel=1e-10)

    def test_reference_radius(self, ref_space):
        assert a_numerical_radius(ref_space, T_LOWER).value == pytest.approx(2.0, abs=1e-9)

    def test_radius_norm_sandwich(self):
        for seed in range(10):
            sp = random_space(3, seed=seed, singular_prob=0.5)
            T = random_operator_in_BA(sp, seed=seed + 30)
            w = a_numerical_radius(sp, T).value
            n = a_op_norm(sp, T).value
            assert 0.5 * n - 1e-9 <= w <= n + 1e-9 * max(1.0, n)

    def test_scale_invariance_in_weight(self, ref_space):
        scaled = make_space(5.0 * np.asarray(A_REF))
        w = a_numerical_radius(ref_space, T_LOWER).value
        assert a_numerical_radius(scaled, T_LOWER).value == pytest.approx(w, rel=1e-10)

    def test_sampling_oracle_lower_bound(self):
        sp = random_space(3, seed=2, singular_prob=0.0)
        T = random_operator_in_BA(sp, seed=3)
        w = a_numerical_radius(sp, T).value
        s = oracle_a_numrad_sample(sp, T, samples=300, seed=4)
        assert s <= w + 1e-9
        assert s >= 0.5 * w  # 300 samples land reasonably close


class TestSelfadjointPositive:
    def test_gram_operator_positive(self, ref_space):
        Tadj = a_adjoint(ref_space, T_LOWER)
        M = Tadj @ T_LOWER
        assert is_a_selfadjoint(ref_space, M)
        assert is_a_positive(ref_space, M)

    def test_generic_not_selfadjoint(self, ref_space):
        assert not is_a_selfadjoint(ref_space, T_LOWER)
        assert not is_a_positive(ref_space, T_LOWER)


class TestPositivePower:
    def test_power_one_is_projection(self, ref_space):
        Tadj = a_adjoint(ref_space, T_LOWER)
        M = Tadj @ T_LOWER
        assert np.allclose(a_positive_power(ref_space, M, 1.0), M, atol=1e-9)

    def test_integer_power_matches_matrix_power(self, ref_space):
        M = a_adjoint(ref_space, T_LOWER) @ T_LOWER
        assert np.allclose(a_positive_power(ref_space, M, 2.0), M @ M, atol=1e-8)

    def test_fractional_power_composes(self, ref_space):
        M = a_adjoint(ref_space, T_LOWER) @ T_LOWER
        H = a_positive_power(ref_space, M, 1.5)
        assert np.allclose(
            a_positive_power(ref_space, M, 3.0), H @ H, atol=1e-7 * np.linalg.norm(M @ M @ M, 2)
        )

    def test_rejects_non_positive(self, ref_space):
        with pytest.raises(NotAPositive):
            a_positive_power(ref_space, T_LOWER, 2.0)

    def test_rejects_unsupported_on_range(self):
        # TT# can hold a ker(A) component under singular A.
        sp = make_space(np.diag([1.0, 0.0]))
        T = np.array([[1.0, 0.0], [1.0, 1.0]])
        W = T @ a_adjoint(sp, T)
        assert is_a_positive(sp, W)
        with pytest.raises(NotSupportedOnRange):
            a_positive_power(sp, W, 2.0)
        # projecting onto ran(A) restores the precondition
        a_positive_power(sp, sp.projA @ W, 2.0)


class TestAOperator:
    def test_cached_views(self, ref_space):
        op = AOperator(ref_space, T_LOWER)
        assert op.in_BA and op.in_BA_half
        assert op.radius == pytest.approx(2.0, abs=1e-9)
        assert op.norm >= op.radius
        assert np.allclose(op.adjoint, a_adjoint(ref_space, T_LOWER))
