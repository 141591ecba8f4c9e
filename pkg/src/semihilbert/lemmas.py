"""Vector-level inequalities as evaluable predicates.

These are the scalar building blocks behind the operator bounds; they
double as standalone property tests and as diagnostics when an operator
bound fails.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .aops import a_adjoint
from .bounds import BoundParams, IdStats, ParamGrid, VerificationSummary, VerifyConfig
from .errors import InvalidParams, NotUnitA
from .matio import matrix_to_dict
from .space import (
    SemiHilbertSpace,
    a_inner,
    a_norm_vec,
    random_a_unit_vector,
    random_operator_in_BA,
    random_space,
)

LEMMA_RTOL = 1e-9


class LemmaId(enum.Enum):
    KR0 = "KR0"
    MD1 = "MD1"
    MD2 = "MD2"
    L24 = "L24"
    COR_ONE = "COR_ONE"
    L25_MAJOR1 = "L25_MAJOR1"
    COR27 = "COR27"
    HOLDER_QHB = "HOLDER_QHB"
    MAX1 = "MAX1"
    QADRI1 = "QADRI1"
    COMB1 = "COMB1"


@dataclass(frozen=True)
class LemmaReport:
    id: LemmaId
    params: BoundParams
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= -LEMMA_RTOL * max(1.0, abs(self.lhs), abs(self.rhs))


class TripleContext:
    """Scalar quantities of one (a, b, e) triple, computed once."""

    def __init__(self, space: SemiHilbertSpace, a, b, e):
        self.space = space
        self.a, self.b, self.e = a, b, e
        self.ne = a_norm_vec(space, e)
        self.ae = abs(a_inner(space, a, e))
        self.eb = abs(a_inner(space, e, b))
        self.ab = abs(a_inner(space, a, b))
        self.na = a_norm_vec(space, a)
        self.nb = a_norm_vec(space, b)


def _require_unit(space: SemiHilbertSpace, name: str, norm: float) -> None:
    if abs(norm - 1.0) > max(space.tol, 1e-8):
        raise NotUnitA(f"||{name}||_A = {norm} deviates from 1 beyond tolerance")


def _eval_lemma_ctx(ctx: TripleContext, lemma_id: LemmaId, params: BoundParams, op=None) -> LemmaReport:
    p = params.validate()
    na, nb, ab, ae, eb = ctx.na, ctx.nb, ctx.ab, ctx.ae, ctx.eb
    if lemma_id is LemmaId.HOLDER_QHB:
        if op is None:
            raise InvalidParams("HOLDER_QHB requires an operator argument")
        _require_unit(ctx.space, "a", na)
        _require_unit(ctx.space, "b", nb)
        space, a, b = ctx.space, ctx.a, ctx.b
        Tadj = a_adjoint(space, op)
        lhs = abs(a_inner(space, op @ a, b)) ** 2
        qa = max(a_inner(space, Tadj @ (op @ a), a).real, 0.0)
        qb = max(a_inner(space, op @ (Tadj @ b), b).real, 0.0)
        return LemmaReport(lemma_id, p, float(lhs), float(math.sqrt(qa * qb)))

    _require_unit(ctx.space, "e", ctx.ne)
    if lemma_id is LemmaId.KR0:
        lhs, rhs = ae * eb, 0.5 * (na * nb + ab)
    elif lemma_id is LemmaId.MD1:
        lhs = ae * eb
        rhs = (1 + p.alpha) / 2 * na * nb + (1 - p.alpha) / 2 * ab
    elif lemma_id is LemmaId.MD2:
        lhs = (ae * eb) ** p.r
        rhs = (1 + p.alpha) / 2 * (na * nb) ** p.r + (1 - p.alpha) / 2 * ab ** p.r
    elif lemma_id is LemmaId.L24:
        lhs = (ae * eb) ** 2
        rhs = 0.25 * (p.gamma1 * (na * nb) ** 2 + p.gamma2 * na * nb * ab)
    elif lemma_id is LemmaId.COR_ONE:
        lhs = (ae * eb) ** (2 * p.r)
        rhs = 0.25 * (p.gamma1 * (na * nb) ** (2 * p.r) + p.gamma2 * (na * nb * ab) ** p.r)
    elif lemma_id is LemmaId.L25_MAJOR1:
        lhs = (ae * eb) ** (2 * p.r)
        rhs = p.delta1 * (na * nb) ** (2 * p.r) + p.delta2 * ab ** (2 * p.r)
    elif lemma_id is LemmaId.COR27:
        lhs = (ae * eb) ** (2 * p.r)
        rhs = p.delta1 * (na * nb) ** (2 * p.r) + p.delta2 * (ab * na * nb) ** p.r
    elif lemma_id is LemmaId.MAX1:
        lhs = ae**2 + abs(a_inner(ctx.space, ctx.b, ctx.e)) ** 2
        rhs = ctx.ne**2 * (max(na**2, nb**2) + ab)
    elif lemma_id is LemmaId.QADRI1:
        lhs = ae + eb
        rhs = math.sqrt((na + nb) * max(na, nb) + 2 * ab)
    elif lemma_id is LemmaId.COMB1:
        lhs = (ae + eb) ** 2
        rhs = math.sqrt(na**4 + nb**4 + 2 * ab**2) + (1 + p.alpha) * na * nb + (1 - p.alpha) * ab
    else:
        raise InvalidParams(f"unknown lemma id {lemma_id}")
    return LemmaReport(lemma_id, p, float(lhs), float(rhs))


def eval_lemma(space: SemiHilbertSpace, a, b, e, lemma_id: LemmaId, params: BoundParams = BoundParams(), op=None) -> LemmaReport:
    """Evaluate one vector-level inequality on the triple (a, b, e).

    e must be A-unit (HOLDER_QHB instead requires A-unit a, b plus the
    operator argument ``op``).
    """
    return _eval_lemma_ctx(TripleContext(space, a, b, e), lemma_id, params, op=op)


def refined_cauchy_schwarz(space: SemiHilbertSpace, a, b, beta: float) -> tuple[float, float]:
    """Micro-check |<a,b>_A|^2 <= (b/(1+b))||a||^2||b||^2 + (1/(1+b))||a|| ||b|| |<a,b>_A|."""
    if beta < 0:
        raise InvalidParams("beta must be >= 0")
    ab = abs(a_inner(space, a, b))
    na, nb = a_norm_vec(space, a), a_norm_vec(space, b)
    lhs = ab**2
    rhs = beta / (1 + beta) * (na * nb) ** 2 + 1 / (1 + beta) * na * nb * ab
    return float(lhs), float(rhs)


def _lemma_param_combos(lemma_id: LemmaId, grid: ParamGrid):
    if lemma_id in (LemmaId.KR0, LemmaId.MAX1, LemmaId.QADRI1, LemmaId.HOLDER_QHB):
        return [BoundParams()]
    if lemma_id in (LemmaId.MD1, LemmaId.COMB1):
        return [BoundParams(alpha=a) for a in grid.alphas]
    if lemma_id is LemmaId.MD2:
        return [BoundParams(alpha=a, r=r) for a, r in itertools.product(grid.alphas, grid.rs)]
    if lemma_id is LemmaId.L24:
        return [BoundParams(alpha=a, beta=b) for a, b in itertools.product(grid.alphas, grid.betas)]
    # COR_ONE, L25_MAJOR1, COR27
    return [
        BoundParams(alpha=a, beta=b, r=r)
        for a, b, r in itertools.product(grid.alphas, grid.betas, grid.rs)
    ]


def verify_lemmas_random(config: VerifyConfig, on_report=None) -> VerificationSummary:
    """Fuzz every lemma over seeded random triples and the parameter grid.

    Triple k draws from seed + k; a and b are free Gaussian vectors while
    e is drawn inside ran(A) and A-normalized. Rank-0 spaces are skipped
    and counted.
    """
    config = config.validate()
    per_id = {lid.value: IdStats() for lid in LemmaId}
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
        a = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        b = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        e = random_a_unit_vector(space, rng)
        ctx = TripleContext(space, a, b, e)
        # HOLDER_QHB evaluates on its own A-unit pair plus a B_A operator.
        xu = random_a_unit_vector(space, rng)
        yu = random_a_unit_vector(space, rng)
        T = random_operator_in_BA(space, seed=trial_seed * 2 + 1)
        holder_ctx = TripleContext(space, xu, yu, e)
        for lid in LemmaId:
            combos = _lemma_param_combos(lid, config.grid)
            for params in combos:
                if lid is LemmaId.HOLDER_QHB:
                    rep = _eval_lemma_ctx(holder_ctx, lid, params, op=T)
                else:
                    rep = _eval_lemma_ctx(ctx, lid, params)
                total += 1
                stats = per_id[lid.value]
                stats.trials += 1
                if rep.slack < stats.min_slack or not rep.holds:
                    used = holder_ctx if lid is LemmaId.HOLDER_QHB else ctx
                    doc = {
                        "id": lid.value,
                        "alpha": params.alpha,
                        "beta": params.beta,
                        "r": params.r,
                        "lhs": rep.lhs,
                        "rhs": rep.rhs,
                        "slack": rep.slack,
                        "A": matrix_to_dict(space.A),
                        "a": matrix_to_dict(np.asarray(used.a)),
                        "b": matrix_to_dict(np.asarray(used.b)),
                        "e": matrix_to_dict(np.asarray(used.e)),
                    }
                    if rep.slack < stats.min_slack:
                        stats.min_slack = rep.slack
                        stats.argmin = doc
                    if not rep.holds:
                        stats.violations += 1
                        violations.append(doc | {"trial": k})
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
