"""Claimed-vs-computed regression rows for the literature's worked examples.

All examples share the 2x2 weight matrix [[1,-1],[-1,2]]. Each row pairs a
computed quantity with the published value and an acceptance tolerance.
"""

from __future__ import annotations

import numpy as np

from .aops import a_adjoint, a_numerical_radius, a_op_norm
from .bounds import BoundId, BoundParams, PairContext, SingleContext, eval_pair, eval_single
from .space import make_space

A_REF = np.array([[1.0, -1.0], [-1.0, 2.0]], dtype=complex)
T_LOWER = np.array([[1.0, 0.0], [1.0, 1.0]], dtype=complex)  # single-operator examples
T_UPPER = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)  # pair example, first operand
T_ADJ_EXPECTED = np.array([[-1.0, 4.0], [-1.0, 3.0]], dtype=complex)


def _row(name: str, computed: float, claimed: float, tol: float) -> dict:
    return {
        "name": name,
        "computed": float(computed),
        "claimed": float(claimed),
        "tol": float(tol),
        "passed": bool(abs(computed - claimed) <= tol),
    }


def _relation_row(name: str, lhs: float, rhs: float) -> dict:
    return {
        "name": name,
        "computed": float(lhs),
        "claimed": float(rhs),
        "tol": 0.0,
        "passed": bool(lhs <= rhs),
        "relation": "<=",
    }


def reference_rows() -> list[dict]:
    """Every regression row from the three worked examples."""
    space = make_space(A_REF)
    rows = []

    # Single-operator example: T = [[1,0],[1,1]].
    ctx = SingleContext(space, T_LOWER)
    adj_err = float(np.max(np.abs(a_adjoint(space, T_LOWER) - T_ADJ_EXPECTED)))
    rows.append(_row("max|T#A - [[-1,4],[-1,3]]|", adj_err, 0.0, 1e-9))
    rows.append(_row("||T#T + TT#||_A", ctx.N, 12.385, 0.01))
    rows.append(_row("w_A(T)", ctx.w, 2.0, 1e-6))
    rows.append(_row("w_A(T^2)", ctx.w2, 2.3, 0.05))
    thm31 = eval_single(space, T_LOWER, BoundId.THM31, BoundParams(alpha=0.5, beta=1.0), ctx=ctx)
    rows.append(_row("THM31 rhs^(1/4) (alpha=0.5, beta=1)", thm31.rhs**0.25, 2.31, 0.02))
    in6 = eval_single(space, T_LOWER, BoundId.IN6, ctx=ctx)
    rows.append(_row("IN6 rhs^(1/4)", in6.rhs**0.25, 2.39, 0.02))
    rows.append(_relation_row("w_A(T) <= THM31 rhs^(1/4)", ctx.w, thm31.rhs**0.25))

    # Same operands, r-power refinement of the half-N^2 bound.
    thm32 = eval_single(space, T_LOWER, BoundId.THM32, BoundParams(alpha=0.5, beta=1.0, r=1.0), ctx=ctx)
    quarter_nsq = 0.25 * ctx.N**2
    rows.append(_row("THM32 rhs (alpha=0.5, beta=1, r=1)", thm32.rhs, 34.21, 0.05))
    rows.append(_row("N^2/4", quarter_nsq, 38.34, 0.05))
    rows.append(_row("THM32 rhs^(1/4)", thm32.rhs**0.25, 2.41, 0.02))
    rows.append(_relation_row("THM32 rhs < N^2/4", thm32.rhs, quarter_nsq))

    # Pair example: T = [[1,1],[0,1]], S = [[1,0],[1,1]].
    pctx = PairContext(space, T_UPPER, T_LOWER)
    rows.append(_row("||T||_A", pctx.t.norm_T, 2.618, 0.005))
    rows.append(_row("||S||_A", pctx.s.norm_T, 2.414, 0.005))
    rows.append(_row("||T+S||_A^2", pctx.norm_TplusS**2, 10.10, 0.02))
    rows.append(_row("||T#T + S#S||_A", pctx.norm_sum, 3.618, 0.005))
    rows.append(_row("||T#T - S#S||_A", pctx.norm_diff, 1.618, 0.005))
    rows.append(_row("w_A(S#T)", pctx.w_st, 4.405, 0.01))
    thm41 = eval_pair(space, T_UPPER, T_LOWER, BoundId.THM41, ctx=pctx)
    rows.append(_row("THM41 rhs^(1/2)", thm41.rhs**0.5, 4.212, 0.01))
    rows.append(_relation_row("THM41 rhs^(1/2) < ||T||_A + ||S||_A", thm41.rhs**0.5, 5.032))
    rows.append(_row("||(T#T)^2 + (S#S)^2||_A", pctx.power_sum_norm_2r(1.0), 17.24, 0.02))
    thm42 = eval_pair(space, T_UPPER, T_LOWER, BoundId.THM42, BoundParams(alpha=0.5), ctx=pctx)
    rows.append(_row("THM42 rhs^(1/2) (alpha=0.5)", thm42.rhs**0.5, 4.37, 0.02))
    return rows
