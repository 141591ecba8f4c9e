"""Semi-Hilbertian structure induced by a PSD weight matrix A.

Builds the cached factorizations (A^{1/2}, pseudoinverses, range
projection), exposes the A-inner product and A-seminorm on vectors, and
provides seeded generators for random spaces and random members of the
algebra of operators admitting A-adjoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InvalidConfig
from .matio import matrix_from_dict, matrix_to_dict

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SemiHilbertSpace:
    """Weight matrix A with its cached factorizations.

    Immutable after construction; safe to share across threads.
    """

    A: np.ndarray
    sqrtA: np.ndarray
    pinvA: np.ndarray
    pinvSqrtA: np.ndarray
    projA: np.ndarray
    rank: int
    tol: float = DEFAULT_TOL
    eig: linalg.EigenDecomposition = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.A.shape[0]


def make_space(A, tol: float = DEFAULT_TOL) -> SemiHilbertSpace:
    """Validate A (square, Hermitian, PSD) and cache its factorizations."""
    A = linalg.as_complex_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise linalg.NotSquare(f"weight matrix must be square, got {A.shape}")
    dec = linalg._psd_eig(A)  # raises NotHermitian / NotPSD
    V = dec.eigenvectors
    lam = dec.eigenvalues
    cut = linalg.rank_tolerance(lam)
    keep = lam > cut
    sqrt_lam = np.sqrt(np.where(keep, lam, 0.0))
    inv_lam = np.where(keep, 1.0 / np.where(keep, lam, 1.0), 0.0)
    inv_sqrt = np.where(keep, 1.0 / np.where(keep, sqrt_lam, 1.0), 0.0)

    def _herm(M):
        return (M + M.conj().T) / 2.0

    space = SemiHilbertSpace(
        A=A,
        sqrtA=_herm((V * sqrt_lam) @ V.conj().T),
        pinvA=_herm((V * inv_lam) @ V.conj().T),
        pinvSqrtA=_herm((V * inv_sqrt) @ V.conj().T),
        projA=_herm(V[:, keep] @ V[:, keep].conj().T),
        rank=int(np.sum(keep)),
        tol=float(tol),
        eig=dec,
    )
    return space


def _check_dim(space: SemiHilbertSpace, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=complex).ravel()
    if x.shape[0] != space.dim:
        raise DimensionMismatch(f"vector length {x.shape[0]} != space dim {space.dim}")
    return x


def a_inner(space: SemiHilbertSpace, x, y) -> complex:
    """<x, y>_A = <Ax, y>: linear in x, conjugate-linear in y."""
    x = _check_dim(space, x)
    y = _check_dim(space, y)
    return complex(np.vdot(y, space.A @ x))


def a_norm_vec(space: SemiHilbertSpace, x) -> float:
    """||x||_A = ||A^{1/2} x||_2."""
    x = _check_dim(space, x)
    return float(np.linalg.norm(space.sqrtA @ x))


def random_space(dim: int, seed: int, singular_prob: float = 0.0, tol: float = DEFAULT_TOL) -> SemiHilbertSpace:
    """Random space with A = G*G; optionally zero the smallest ceil(dim/3) eigenvalues."""
    if dim < 1:
        raise InvalidConfig("dim must be >= 1")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    A = G.conj().T @ G
    A = (A + A.conj().T) / 2.0
    if rng.random() < singular_prob:
        w, V = np.linalg.eigh(A)
        n_zero = -(-dim // 3)  # ceil(dim/3)
        w[:n_zero] = 0.0
        A = (V * w) @ V.conj().T
        A = (A + A.conj().T) / 2.0
    return make_space(A, tol=tol)


def random_operator_in_BA(space: SemiHilbertSpace, seed: int) -> np.ndarray:
    """Random operator admitting an A-adjoint, built from a complex Gaussian.

    T* must leave ran(A) invariant; the three-term block construction
    P G P + (I-P) G (I-P) + (I-P) G P spans exactly that set.
    """
    rng = np.random.default_rng(seed)
    n = space.dim
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    P = space.projA
    Q = np.eye(n) - P
    return P @ G @ P + Q @ G @ Q + Q @ G @ P


def random_a_unit_vector(space: SemiHilbertSpace, rng: np.random.Generator) -> np.ndarray:
    """Random vector in ran(A), rescaled to ||x||_A = 1."""
    from .errors import DegenerateSpace

    if space.rank == 0:
        raise DegenerateSpace("rank-0 weight matrix has no A-unit vectors")
    while True:
        x = rng.standard_normal(space.dim) + 1j * rng.standard_normal(space.dim)
        x = space.projA @ x
        nrm = a_norm_vec(space, x)
        if nrm > 1e-8:
            return x / nrm


def save_space(path, space: SemiHilbertSpace) -> None:
    doc = matrix_to_dict(space.A)
    doc["tol"] = space.tol
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def load_space(path) -> SemiHilbertSpace:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidConfig(f"cannot read space file {path}: {exc}") from exc
    A = matrix_from_dict(doc)
    return make_space(A, tol=float(doc.get("tol", DEFAULT_TOL)))
