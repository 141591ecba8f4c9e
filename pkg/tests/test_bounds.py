"""Inequality catalog: formulas, parameter handling, and the randomized suite."""

import math

import numpy as np
import pytest

from semihilbert.bounds import (
    PAIR_IDS,
    SINGLE_IDS,
    BoundId,
    BoundParams,
    BoundReport,
    PairContext,
    ParamGrid,
    SingleContext,
    VerifyConfig,
    eval_pair,
    eval_single,
    verify_random,
)
from semihilbert.errors import InvalidConfig, InvalidParams

from .conftest import A_REF, T_LOWER, T_UPPER


class TestParams:
    @pytest.mark.parametrize(
        "kwargs",
        [dict(alpha=-0.1), dict(alpha=1.1), dict(beta=-1.0), dict(r=0.5), dict(n=0), dict(n=1.5)],
    )
    def test_validate_rejects(self, kwargs):
        with pytest.raises(InvalidParams):
            BoundParams(**kwargs).validate()

    def test_coefficients_at_corners(self):
        # alpha=1 collapses the mixed terms entirely.
        p = BoundParams(alpha=1.0, beta=0.0)
        assert p.gamma1 == pytest.approx(4.0)
        assert p.gamma2 == pytest.approx(0.0)
        assert p.delta2 == pytest.approx(0.0)
        # alpha=0, beta=0 reproduces the unrefined constants.
        q = BoundParams()
        assert q.gamma1 == pytest.approx(1.0)
        assert q.gamma2 == pytest.approx(3.0)
        assert q.delta1 == pytest.approx(0.5)
        assert q.delta2 == pytest.approx(0.5)

    def test_thm31_alpha0_specializes_to_in7(self, ref_space):
        for beta in (0.0, 0.5, 1.0, 10.0):
            a = eval_single(ref_space, T_LOWER, BoundId.THM31, BoundParams(alpha=0.0, beta=beta))
            b = eval_single(ref_space, T_LOWER, BoundId.IN7, BoundParams(beta=beta))
            assert a.rhs == pytest.approx(b.rhs, rel=1e-12)

    def test_thm32_alpha0_r1_specializes_to_in8(self, ref_space):
        for beta in (0.0, 0.5, 1.0, 10.0):
            a = eval_single(
                ref_space, T_LOWER, BoundId.THM32, BoundParams(alpha=0.0, beta=beta, r=1.0)
            )
            b = eval_single(ref_space, T_LOWER, BoundId.IN8, BoundParams(beta=beta))
            assert a.rhs == pytest.approx(b.rhs, rel=1e-12)


class TestReport:
    def test_slack_and_holds(self):
        rep = BoundReport(BoundId.IN3, BoundParams(), lhs=1.0, rhs=2.0)
        assert rep.slack == 1.0 and rep.holds

    def test_tiny_negative_slack_tolerated(self):
        rep = BoundReport(BoundId.IN3, BoundParams(), lhs=1.0 + 1e-9, rhs=1.0)
        assert rep.holds

    def test_infinite_rhs_holds(self):
        rep = BoundReport(BoundId.IN3, BoundParams(), lhs=math.inf, rhs=math.inf)
        assert rep.holds and rep.slack == math.inf
        assert BoundReport(BoundId.IN3, BoundParams(), lhs=1.0, rhs=math.inf).holds

    def test_infinite_lhs_fails(self):
        assert not BoundReport(BoundId.IN3, BoundParams(), lhs=math.inf, rhs=5.0).holds


class TestEvaluation:
    def test_all_single_bounds_hold_on_reference(self, ref_space):
        ctx = SingleContext(ref_space, T_LOWER)
        for bid in SINGLE_IDS:
            rep = eval_single(ref_space, T_LOWER, bid, BoundParams(alpha=0.5, beta=1.0), ctx=ctx)
            assert rep.holds, f"{bid} failed: lhs={rep.lhs} rhs={rep.rhs}"

    def test_all_pair_bounds_hold_on_reference(self, ref_space):
        ctx = PairContext(ref_space, T_UPPER, T_LOWER)
        for bid in PAIR_IDS:
            rep = eval_pair(ref_space, T_UPPER, T_LOWER, bid, BoundParams(alpha=0.5, beta=1.0), ctx=ctx)
            assert rep.holds, f"{bid} failed: lhs={rep.lhs} rhs={rep.rhs}"

    def test_in1_sandwich_values(self, ref_space):
        lower = eval_single(ref_space, T_LOWER, BoundId.IN1_LOWER)
        upper = eval_single(ref_space, T_LOWER, BoundId.IN1_UPPER)
        assert lower.rhs == upper.lhs  # both are w_A(T)
        assert lower.lhs == pytest.approx(0.5 * upper.rhs)

    def test_context_matches_direct_evaluation(self, ref_space):
        ctx = SingleContext(ref_space, T_LOWER)
        with_ctx = eval_single(ref_space, T_LOWER, BoundId.THM31, BoundParams(0.25, 2.0), ctx=ctx)
        without = eval_single(ref_space, T_LOWER, BoundId.THM31, BoundParams(0.25, 2.0))
        assert with_ctx.lhs == without.lhs and with_ctx.rhs == without.rhs

    def test_wrong_arity_rejected(self, ref_space):
        with pytest.raises(InvalidParams):
            eval_single(ref_space, T_LOWER, BoundId.THM41)
        with pytest.raises(InvalidParams):
            eval_pair(ref_space, T_UPPER, T_LOWER, BoundId.THM31)

    def test_hermitian_equality_case(self):
        # For an A-selfadjoint operator w_A = ||.||_A, so IN1 is tight above.
        sp = pytest.importorskip("semihilbert.space").make_space(np.asarray(A_REF))
        from semihilbert.aops import a_adjoint

        M = a_adjoint(sp, T_LOWER) @ T_LOWER
        rep = eval_single(sp, np.asarray(M), BoundId.IN1_UPPER)
        assert rep.lhs == pytest.approx(rep.rhs, rel=1e-9)


class TestVerifyRandom:
    def test_config_validation(self):
        with pytest.raises(InvalidConfig):
            VerifyConfig(trials=0).validate()
        with pytest.raises(InvalidConfig):
            VerifyConfig(dims=()).validate()
        with pytest.raises(InvalidConfig):
            VerifyConfig(singular_prob=1.5).validate()

    def test_small_run_zero_violations(self):
        cfg = VerifyConfig(dims=(2, 3), trials=20, seed=7, singular_prob=0.5)
        summary = verify_random(cfg)
        assert summary.violations == 0
        assert summary.total == sum(s.trials for s in summary.per_id.values())
        assert summary.worst_slack > -1e-7

    def test_deterministic(self):
        cfg = VerifyConfig(dims=(2, 3), trials=10, seed=3, singular_prob=0.5)
        a = verify_random(cfg).to_dict()
        b = verify_random(cfg).to_dict()
        assert a == b

    def test_reduced_grid(self):
        grid = ParamGrid(alphas=(0.5,), betas=(1.0,), rs=(1.0,), ns=(2,))
        cfg = VerifyConfig(dims=(2,), trials=3, seed=1, singular_prob=0.0, grid=grid)
        summary = verify_random(cfg)
        assert summary.per_id[BoundId.THM31.value].trials == 3

    def test_on_report_stream(self):
        seen = []
        cfg = VerifyConfig(dims=(2,), trials=2, seed=0, singular_prob=0.0)
        summary = verify_random(cfg, on_report=lambda trial, rep: seen.append((trial, rep.id)))
        assert len(seen) == summary.total

    def test_argmin_instance_is_replayable(self, tmp_path):
        from semihilbert.matio import matrix_from_dict
        from semihilbert.space import make_space

        cfg = VerifyConfig(dims=(3,), trials=5, seed=11, singular_prob=0.5)
        summary = verify_random(cfg)
        stats = summary.per_id[BoundId.THM31.value]
        doc = stats.argmin
        space = make_space(matrix_from_dict(doc["A"]))
        rep = eval_single(
            space,
            matrix_from_dict(doc["T"]),
            BoundId.THM31,
            BoundParams(alpha=doc["alpha"], beta=doc["beta"]),
        )
        assert rep.slack == pytest.approx(stats.min_slack, rel=1e-9, abs=1e-12)
