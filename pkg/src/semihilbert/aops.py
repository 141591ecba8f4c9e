"""Operator-level machinery for a semi-Hilbertian space.

A-adjoints, membership tests for the two operator algebras, the
A-operator seminorm and A-numerical radius (computed through the reduced
matrix on ran(A), with an independent sampling oracle), A-selfadjoint and
A-positive predicates, and fractional powers of A-positive operators.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .errors import (
    DegenerateSpace,
    DimensionMismatch,
    NotAPositive,
    NotInBA,
    NotInBAHalf,
    NotSupportedOnRange,
)
from .space import SemiHilbertSpace, a_inner, a_norm_vec, random_a_unit_vector


class RadiusMethod(enum.Enum):
    REDUCTION = "reduction"
    SAMPLE_ORACLE = "sample_oracle"
    GRID_ORACLE = "grid_oracle"


@dataclass(frozen=True)
class RadiusResult:
    """A-seminorm or A-numerical-radius value; math.inf outside B_{A^{1/2}}."""

    value: float
    method: RadiusMethod

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)


def _check_operator(space: SemiHilbertSpace, T) -> np.ndarray:
    T = linalg.as_complex_matrix(T)
    if T.shape != (space.dim, space.dim):
        raise DimensionMismatch(f"operator shape {T.shape} != ({space.dim}, {space.dim})")
    return T


def in_b_a(space: SemiHilbertSpace, T) -> bool:
    """True iff T admits an A-adjoint, i.e. ran(T*A) is contained in ran(A)."""
    T = _check_operator(space, T)
    TsA = T.conj().T @ space.A
    leak = (np.eye(space.dim) - space.projA) @ TsA
    return linalg.spectral_norm(leak) <= space.tol * max(1.0, linalg.spectral_norm(TsA))


def in_b_a_half(space: SemiHilbertSpace, T) -> bool:
    """True iff T is bounded in the A-seminorm (annihilates ker A up to tol)."""
    T = _check_operator(space, T)
    ST = space.sqrtA @ T
    leak = ST @ (np.eye(space.dim) - space.projA)
    return linalg.spectral_norm(leak) <= space.tol * max(1.0, linalg.spectral_norm(ST))


def a_adjoint(space: SemiHilbertSpace, T) -> np.ndarray:
    """A-adjoint A^dag T* A; requires T in B_A."""
    T = _check_operator(space, T)
    if not in_b_a(space, T):
        raise NotInBA("operator does not admit an A-adjoint")
    return space.pinvA @ T.conj().T @ space.A


def is_a_selfadjoint(space: SemiHilbertSpace, T) -> bool:
    """True iff AT is Hermitian within tolerance."""
    T = _check_operator(space, T)
    AT = space.A @ T
    return linalg.spectral_norm(AT - AT.conj().T) <= space.tol * max(1.0, linalg.spectral_norm(AT))


def is_a_positive(space: SemiHilbertSpace, T) -> bool:
    """True iff AT is Hermitian with nonnegative spectrum within tolerance."""
    T = _check_operator(space, T)
    if not is_a_selfadjoint(space, T):
        return False
    AT = space.A @ T
    H = (AT + AT.conj().T) / 2.0
    w = np.linalg.eigvalsh(H)
    return bool(w[0] >= -space.tol * max(1.0, abs(w[-1])))


def reduced_matrix(space: SemiHilbertSpace, T) -> np.ndarray:
    """Classical representative A^{1/2} T (A^{1/2})^dag of T on ran(A)."""
    T = _check_operator(space, T)
    if not in_b_a_half(space, T):
        raise NotInBAHalf("operator is unbounded in the A-seminorm")
    return space.sqrtA @ T @ space.pinvSqrtA


def a_op_norm(space: SemiHilbertSpace, T) -> RadiusResult:
    """A-operator seminorm; infinite outside B_{A^{1/2}}."""
    T = _check_operator(space, T)
    if not in_b_a_half(space, T):
        return RadiusResult(math.inf, RadiusMethod.REDUCTION)
    return RadiusResult(linalg.spectral_norm(reduced_matrix(space, T)), RadiusMethod.REDUCTION)


def a_numerical_radius(space: SemiHilbertSpace, T) -> RadiusResult:
    """A-numerical radius via the reduced matrix; infinite outside B_{A^{1/2}}."""
    T = _check_operator(space, T)
    if not in_b_a_half(space, T):
        return RadiusResult(math.inf, RadiusMethod.REDUCTION)
    return RadiusResult(linalg.numerical_radius(reduced_matrix(space, T)), RadiusMethod.REDUCTION)


def oracle_a_numrad_sample(space: SemiHilbertSpace, T, samples: int, seed: int) -> float:
    """Sampling lower bound for the A-numerical radius.

    Maximizes |<Tx, x>_A| over random A-unit vectors drawn inside ran(A);
    independent of the reduction path.
    """
    T = _check_operator(space, T)
    if space.rank == 0:
        raise DegenerateSpace("rank-0 weight matrix")
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(samples):
        x = random_a_unit_vector(space, rng)
        best = max(best, abs(a_inner(space, T @ x, x)))
    return best


def a_positive_power(space: SemiHilbertSpace, W, r: float) -> np.ndarray:
    """Power W^r of an A-positive operator supported on ran(A), r >= 1.

    Computed through the PSD representative A^{1/2} W (A^{1/2})^dag, whose
    eigendecomposition power is pulled back to the original coordinates.
    """
    W = _check_operator(space, W)
    if not is_a_positive(space, W):
        raise NotAPositive("operator is not A-positive")
    n = space.dim
    P = space.projA
    scale = max(1.0, linalg.spectral_norm(W))
    if (
        linalg.spectral_norm(W @ (np.eye(n) - P)) > space.tol * scale
        or linalg.spectral_norm(P @ W - W) > space.tol * scale
    ):
        raise NotSupportedOnRange("operator leaks outside ran(A)")
    What = space.sqrtA @ W @ space.pinvSqrtA
    What = (What + What.conj().T) / 2.0
    w, V = np.linalg.eigh(What)
    w = np.clip(w, 0.0, None)
    powered = (V * w**r) @ V.conj().T
    return space.pinvSqrtA @ powered @ space.sqrtA


class AOperator:
    """Square matrix paired with a space, with lazily cached derived data."""

    def __init__(self, space: SemiHilbertSpace, T):
        self.space = space
        self.T = _check_operator(space, T)

    @cached_property
    def in_BA(self) -> bool:
        return in_b_a(self.space, self.T)

    @cached_property
    def in_BA_half(self) -> bool:
        return in_b_a_half(self.space, self.T)

    @cached_property
    def adjoint(self) -> np.ndarray:
        return a_adjoint(self.space, self.T)

    @cached_property
    def norm(self) -> float:
        return a_op_norm(self.space, self.T).value

    @cached_property
    def radius(self) -> float:
        return a_numerical_radius(self.space, self.T).value
