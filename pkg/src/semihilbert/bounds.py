"""Evaluable catalog of the operator-level A-numerical-radius inequalities.

Each evaluation yields a BoundReport with identifier, parameters, both
sides of the inequality, the slack rhs - lhs, and a derived holds flag.
``verify_random`` fuzzes the whole catalog over seeded random spaces and
operators; any violation indicates an implementation bug, since every
inequality is a proved theorem.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .aops import (
    a_adjoint,
    a_numerical_radius,
    a_op_norm,
    a_positive_power,
    in_b_a,
)
from .errors import InvalidConfig, InvalidParams, NotInBA
from .matio import matrix_to_dict
from .space import SemiHilbertSpace, random_operator_in_BA, random_space

# Relative tolerance for the holds flag. The radius enters at the 4th
# power, so the 1e-10 kernel accuracy is budgeted up by ~10^3.
HOLDS_RTOL = 1e-7


class BoundId(enum.Enum):
    IN1_LOWER = "IN1_LOWER"
    IN1_UPPER = "IN1_UPPER"
    IN2_POWER = "IN2_POWER"
    IN3 = "IN3"
    IN4 = "IN4"
    IN5_LOWER = "IN5_LOWER"
    IN6 = "IN6"
    IN7 = "IN7"
    IN8 = "IN8"
    THM31 = "THM31"
    THM32 = "THM32"
    THM_PROD_4R = "THM_PROD_4R"
    COR_PROD = "COR_PROD"
    THM_RAHMA1 = "THM_RAHMA1"
    CF1 = "CF1"
    THM41 = "THM41"
    THM42 = "THM42"
    THM43 = "THM43"


SINGLE_IDS = (
    BoundId.IN1_LOWER,
    BoundId.IN1_UPPER,
    BoundId.IN2_POWER,
    BoundId.IN3,
    BoundId.IN4,
    BoundId.IN5_LOWER,
    BoundId.IN6,
    BoundId.IN7,
    BoundId.IN8,
    BoundId.THM31,
    BoundId.THM32,
)

PAIR_IDS = (
    BoundId.THM_PROD_4R,
    BoundId.COR_PROD,
    BoundId.THM_RAHMA1,
    BoundId.CF1,
    BoundId.THM41,
    BoundId.THM42,
    BoundId.THM43,
)


@dataclass(frozen=True)
class BoundParams:
    """Free parameters of the inequality catalog."""

    alpha: float = 0.0
    beta: float = 0.0
    r: float = 1.0
    n: int = 2

    def validate(self) -> "BoundParams":
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidParams(f"alpha must be in [0, 1], got {self.alpha}")
        if self.beta < 0.0:
            raise InvalidParams(f"beta must be >= 0, got {self.beta}")
        if self.r < 1.0:
            raise InvalidParams(f"r must be >= 1, got {self.r}")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParams(f"n must be a positive integer, got {self.n}")
        return self

    @property
    def gamma1(self) -> float:
        a, b = self.alpha, self.beta
        return ((2 * b + 1) * (1 + a * a) + 2 * a) / (1 + b)

    @property
    def gamma2(self) -> float:
        a, b = self.alpha, self.beta
        return (1 - a) * (2 + (1 + a) * (1 + 2 * b)) / (1 + b)

    @property
    def delta1(self) -> float:
        a, b = self.alpha, self.beta
        return (1 + a + 2 * b) / (2 * (1 + b))

    @property
    def delta2(self) -> float:
        a, b = self.alpha, self.beta
        return (1 - a) / (2 * (1 + b))


@dataclass(frozen=True)
class BoundReport:
    id: BoundId
    params: BoundParams
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        if math.isinf(self.rhs) and math.isinf(self.lhs):
            return math.inf  # vacuous instance: inf <= inf
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        if math.isinf(self.rhs):
            return True
        if math.isinf(self.lhs):
            return False
        return self.slack >= -HOLDS_RTOL * max(1.0, abs(self.lhs), abs(self.rhs))


class SingleContext:
    """Caches the derived quantities shared by the single-operator bounds."""

    def __init__(self, space: SemiHilbertSpace, T):
        if not in_b_a(space, T):
            raise NotInBA("operator does not admit an A-adjoint")
        self.space = space
        self.T = np.asarray(T, dtype=complex)
        self.Tadj = a_adjoint(space, T)
        self.M = self.Tadj @ self.T  # T#T, A-positive
        self.MT = self.T @ self.Tadj  # TT#, A-positive
        self.N = a_op_norm(space, self.M + self.MT).value
        self.norm_T = a_op_norm(space, T).value
        self.w = a_numerical_radius(space, T).value
        self._w_pow: dict[int, float] = {1: self.w}
        self._power_norm: dict[float, float] = {}

    def w_of_power(self, n: int) -> float:
        """w_A(T^n)."""
        if n not in self._w_pow:
            self._w_pow[n] = a_numerical_radius(
                self.space, np.linalg.matrix_power(self.T, n)
            ).value
        return self._w_pow[n]

    @property
    def w2(self) -> float:
        return self.w_of_power(2)

    def power_sum_norm(self, r: float) -> float:
        """||(T#T)^r + (TT#)^r||_A.

        TT# may have a component inside ker(A) under singular A; projecting
        onto ran(A) changes no A-level quantity and restores the support
        precondition of the fractional power.
        """
        if r not in self._power_norm:
            P = self.space.projA
            Mr = a_positive_power(self.space, self.M, r)
            Nr = a_positive_power(self.space, P @ self.MT, r)
            self._power_norm[r] = a_op_norm(self.space, Mr + Nr).value
        return self._power_norm[r]


def _eval_single_ctx(ctx: SingleContext, bound_id: BoundId, params: BoundParams) -> BoundReport:
    p = params.validate()
    w, N = ctx.w, ctx.N
    if bound_id is BoundId.IN1_LOWER:
        lhs, rhs = 0.5 * ctx.norm_T, w
    elif bound_id is BoundId.IN1_UPPER:
        lhs, rhs = w, ctx.norm_T
    elif bound_id is BoundId.IN2_POWER:
        lhs, rhs = ctx.w_of_power(int(p.n)), w ** p.n
    elif bound_id is BoundId.IN3:
        lhs, rhs = w**2, 0.5 * N
    elif bound_id is BoundId.IN4:
        lhs, rhs = w**2, 0.5 * (ctx.norm_T**2 + ctx.w2)
    elif bound_id is BoundId.IN5_LOWER:
        lhs, rhs = 0.25 * N, w**2
    elif bound_id is BoundId.IN6:
        lhs, rhs = w**4, (3.0 / 16.0) * N**2 + (1.0 / 8.0) * N * ctx.w2
    elif bound_id is BoundId.IN7:
        b = p.beta
        lhs = w**4
        rhs = (1 + 2 * b) / (16 * (1 + b)) * N**2 + (2 * b + 3) / (8 * (1 + b)) * N * ctx.w2
    elif bound_id is BoundId.IN8:
        b = p.beta
        lhs = w**4
        rhs = (1 + 2 * b) / (8 * (1 + b)) * N**2 + 1 / (2 * (1 + b)) * ctx.w2**2
    elif bound_id is BoundId.THM31:
        lhs = w**4
        rhs = p.gamma1 / 16 * N**2 + p.gamma2 / 8 * N * ctx.w2
    elif bound_id is BoundId.THM32:
        lhs = w ** (4 * p.r)
        rhs = p.delta1 / 4 * ctx.power_sum_norm(p.r) ** 2 + p.delta2 * ctx.w2 ** (2 * p.r)
    else:
        raise InvalidParams(f"{bound_id} is not a single-operator bound")
    return BoundReport(id=bound_id, params=p, lhs=float(lhs), rhs=float(rhs))


def eval_single(space: SemiHilbertSpace, T, bound_id: BoundId, params: BoundParams = BoundParams(), *, ctx: SingleContext | None = None) -> BoundReport:
    """Evaluate one single-operator inequality; T must be in B_A."""
    if ctx is None:
        ctx = SingleContext(space, T)
    return _eval_single_ctx(ctx, bound_id, params)


class PairContext:
    """Caches the derived quantities shared by the two-operator bounds."""

    def __init__(self, space: SemiHilbertSpace, T, S):
        self.space = space
        self.t = SingleContext(space, T)
        self.s = SingleContext(space, S)
        self.M = self.t.M  # T#T
        self.Z = self.s.M  # S#S
        self.w_st = a_numerical_radius(space, self.s.Tadj @ self.t.T).value
        self.w_zm = a_numerical_radius(space, self.Z @ self.M).value
        self.norm_sum = a_op_norm(space, self.M + self.Z).value
        self.norm_diff = a_op_norm(space, self.M - self.Z).value
        self.norm_TplusS = a_op_norm(space, self.t.T + self.s.T).value
        self.w_TplusS = a_numerical_radius(space, self.t.T + self.s.T).value
        self.w_M = a_numerical_radius(space, self.M).value
        self.w_Z = a_numerical_radius(space, self.Z).value
        self._K: dict[float, float] = {}

    def power_sum_norm_2r(self, r: float) -> float:
        """||(T#T)^{2r} + (S#S)^{2r}||_A."""
        if r not in self._K:
            Mr = a_positive_power(self.space, self.M, 2 * r)
            Zr = a_positive_power(self.space, self.Z, 2 * r)
            self._K[r] = a_op_norm(self.space, Mr + Zr).value
        return self._K[r]


def _eval_pair_ctx(ctx: PairContext, bound_id: BoundId, params: BoundParams) -> BoundReport:
    p = params.validate()
    if bound_id is BoundId.THM_PROD_4R:
        K = ctx.power_sum_norm_2r(p.r)
        lhs = ctx.w_st ** (4 * p.r)
        rhs = p.gamma1 / 16 * K**2 + p.gamma2 / 8 * K * ctx.w_zm ** p.r
    elif bound_id is BoundId.COR_PROD:
        lhs = ctx.w_zm ** p.r
        rhs = 0.5 * ctx.power_sum_norm_2r(p.r)
    elif bound_id is BoundId.THM_RAHMA1:
        a, b = p.alpha, p.beta
        K = ctx.power_sum_norm_2r(p.r)
        lhs = ctx.w_st ** (4 * p.r)
        rhs = (1 + a + 2 * b) / (8 * (1 + b)) * K**2 + (1 - a) / (2 * (1 + b)) * ctx.w_zm ** (2 * p.r)
    elif bound_id is BoundId.CF1:
        lhs = ctx.w_st**2
        rhs = 0.5 * ctx.power_sum_norm_2r(1.0)
    elif bound_id is BoundId.THM41:
        lhs = ctx.norm_TplusS**2
        rhs = 0.5 * (ctx.norm_sum + ctx.norm_diff) + ctx.t.norm_T * ctx.s.norm_T + 2 * ctx.w_st
    elif bound_id is BoundId.THM42:
        lhs = ctx.norm_TplusS**2
        rhs = (
            math.sqrt(ctx.power_sum_norm_2r(1.0) + 2 * ctx.w_st**2)
            + (p.alpha + 1) * ctx.t.norm_T * ctx.s.norm_T
            + (1 - p.alpha) * ctx.w_st
        )
    elif bound_id is BoundId.THM43:
        lhs = ctx.w_TplusS**2
        rhs = 0.5 * (ctx.norm_sum + ctx.norm_diff) + math.sqrt(ctx.w_M * ctx.w_Z) + 2 * ctx.w_st
    else:
        raise InvalidParams(f"{bound_id} is not a two-operator bound")
    return BoundReport(id=bound_id, params=p, lhs=float(lhs), rhs=float(rhs))


def eval_pair(space: SemiHilbertSpace, T, S, bound_id: BoundId, params: BoundParams = BoundParams(), *, ctx: PairContext | None = None) -> BoundReport:
    """Evaluate one two-operator inequality; T and S must be in B_A."""
    if ctx is None:
        ctx = PairContext(space, T, S)
    return _eval_pair_ctx(ctx, bound_id, params)


# ---------------------------------------------------------------------------
# Randomized verification
# ---------------------------------------------------------------------------

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_BETAS = (0.0, 0.5, 1.0, 10.0)
DEFAULT_RS = (1.0, 2.0)
DEFAULT_NS = (2, 3)


@dataclass(frozen=True)
class ParamGrid:
    alphas: tuple = DEFAULT_ALPHAS
    betas: tuple = DEFAULT_BETAS
    rs: tuple = DEFAULT_RS
    ns: tuple = DEFAULT_NS


@dataclass(frozen=True)
class VerifyConfig:
    dims: tuple = (2, 3, 4, 5, 6)
    trials: int = 100
    seed: int = 0
    singular_prob: float = 0.3
    grid: ParamGrid = field(default_factory=ParamGrid)

    def validate(self) -> "VerifyConfig":
        if self.trials < 1:
            raise InvalidConfig("trials must be >= 1")
        if not self.dims:
            raise InvalidConfig("dims must be nonempty")
        if not 0.0 <= self.singular_prob <= 1.0:
            raise InvalidConfig("singular_prob must be in [0, 1]")
        return self


@dataclass
class IdStats:
    trials: int = 0
    violations: int = 0
    min_slack: float = math.inf
    argmin: dict | None = None


@dataclass
class VerificationSummary:
    seed: int
    config: dict
    total: int
    violations: int
    worst_slack: float
    per_id: dict
    violation_list: list
    skipped: int = 0

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "total": self.total,
            "violations": self.violations,
            "worst_slack": self.worst_slack,
            "skipped": self.skipped,
            "per_id": {
                k: {
                    "trials": v.trials,
                    "violations": v.violations,
                    "min_slack": v.min_slack,
                    "argmin": v.argmin,
                }
                for k, v in self.per_id.items()
            },
            "violations_detail": self.violation_list,
        }


def _param_combos(bound_id: BoundId, grid: ParamGrid):
    if bound_id in (BoundId.IN1_LOWER, BoundId.IN1_UPPER, BoundId.IN3, BoundId.IN4,
                    BoundId.IN5_LOWER, BoundId.IN6, BoundId.CF1, BoundId.THM41, BoundId.THM43):
        return [BoundParams()]
    if bound_id is BoundId.IN2_POWER:
        return [BoundParams(n=n) for n in grid.ns]
    if bound_id in (BoundId.IN7, BoundId.IN8):
        return [BoundParams(beta=b) for b in grid.betas]
    if bound_id is BoundId.THM31:
        return [BoundParams(alpha=a, beta=b) for a, b in itertools.product(grid.alphas, grid.betas)]
    if bound_id is BoundId.THM42:
        return [BoundParams(alpha=a) for a in grid.alphas]
    if bound_id is BoundId.COR_PROD:
        return [BoundParams(r=r) for r in grid.rs]
    # THM32, THM_PROD_4R, THM_RAHMA1
    return [
        BoundParams(alpha=a, beta=b, r=r)
        for a, b, r in itertools.product(grid.alphas, grid.betas, grid.rs)
    ]


def _instance_doc(space: SemiHilbertSpace, report: BoundReport, mats: dict) -> dict:
    doc = {
        "id": report.id.value,
        "alpha": report.params.alpha,
        "beta": report.params.beta,
        "r": report.params.r,
        "n": report.params.n,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "slack": report.slack,
        "holds": report.holds,
        "A": matrix_to_dict(space.A),
    }
    for name, M in mats.items():
        doc[name] = matrix_to_dict(M)
    return doc


def verify_random(config: VerifyConfig, on_report=None) -> VerificationSummary:
    """Run every bound over seeded random spaces/operators and a parameter grid.

    Trial k draws from seed + k, so results are deterministic and
    independent of execution order. ``on_report(trial, report)`` is called
    for every evaluation when given (used to stream CSV rows).
    """
    config = config.validate()
    per_id = {bid.value: IdStats() for bid in BoundId}
    violations = []
    total = 0
    skipped = 0
    dims = tuple(config.dims)
    for k in range(config.trials):
        trial_seed = config.seed + k
        rng = np.random.default_rng(trial_seed)
        dim = int(dims[k % len(dims)])
        space = random_space(dim, seed=trial_seed, singular_prob=config.singular_prob)
        if space.rank == 0:
            skipped += 1
            continue
        T = random_operator_in_BA(space, seed=trial_seed * 2 + 1)
        S = random_operator_in_BA(space, seed=trial_seed * 2 + 2)
        sctx = SingleContext(space, T)
        pctx = PairContext(space, T, S)
        for bid in BoundId:
            for params in _param_combos(bid, config.grid):
                if bid in SINGLE_IDS:
                    rep = _eval_single_ctx(sctx, bid, params)
                    mats = {"T": T}
                else:
                    rep = _eval_pair_ctx(pctx, bid, params)
                    mats = {"T": T, "S": S}
                total += 1
                stats = per_id[bid.value]
                stats.trials += 1
                if rep.slack < stats.min_slack:
                    stats.min_slack = rep.slack
                    stats.argmin = _instance_doc(space, rep, mats)
                if not rep.holds:
                    stats.violations += 1
                    violations.append(_instance_doc(space, rep, mats) | {"trial": k})
                if on_report is not None:
                    on_report(k, rep)
    worst = min((s.min_slack for s in per_id.values() if s.trials), default=math.inf)
    return VerificationSummary(
        seed=config.seed,
        config={
            "dims": list(dims),
            "trials": config.trials,
            "singular_prob": config.singular_prob,
            "alphas": list(config.grid.alphas),
            "betas": list(config.grid.betas),
            "rs": list(config.grid.rs),
            "ns": list(config.grid.ns),
        },
        total=total,
        violations=len(violations),
        worst_slack=worst,
        per_id=per_id,
        violation_list=violations,
        skipped=skipped,
    )
