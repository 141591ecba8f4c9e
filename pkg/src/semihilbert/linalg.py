"""Dense complex linear algebra kernel.

Hermitian eigendecomposition, PSD square root, Moore-Penrose pseudoinverse
of PSD matrices, range projection, spectral norm, and the classical
numerical radius via an angular sweep. All functions are pure and operate
on immutable ``numpy`` arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPSD, NotSquare

# Relative symmetry / PSD tolerances used by the kernel.
HERM_TOL = 1e-10
PSD_CLAMP_TOL = 1e-10

# Angular sweep resolution for the numerical radius.
RADIUS_GRID_POINTS = 720
RADIUS_ANGLE_WIDTH = 1e-12

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_complex_matrix(M) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise NotSquare(f"expected a 2-D matrix, got ndim={M.ndim}")
    if not np.all(np.isfinite(M.real)) or not np.all(np.isfinite(M.imag)):
        raise ValueError("matrix contains NaN or Inf entries")
    return M


def _require_square(M: np.ndarray) -> np.ndarray:
    M = as_complex_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {M.shape}")
    return M


def spectral_norm(M) -> float:
    """Largest singular value of M."""
    M = as_complex_matrix(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def herm_eig(M) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.

    Raises NotHermitian if the symmetry residual exceeds 1e-10 relative.
    """
    M = _require_square(M)
    scale = max(1.0, spectral_norm(M))
    if spectral_norm(M - M.conj().T) > HERM_TOL * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    try:
        w, V = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    order = np.argsort(w)[::-1]
    return EigenDecomposition(eigenvalues=w[order].copy(), eigenvectors=V[:, order].copy())


def rank_tolerance(eigenvalues: np.ndarray) -> float:
    """Pseudoinverse rank cutoff: n * eps * lambda_max."""
    n = len(eigenvalues)
    lam_max = float(np.max(eigenvalues, initial=0.0))
    return n * np.finfo(float).eps * max(lam_max, 0.0)


def _psd_eig(A) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian PSD matrix with tiny negatives clamped to 0."""
    dec = herm_eig(A)
    lam_max = float(max(dec.eigenvalues[0], 0.0)) if len(dec.eigenvalues) else 0.0
    floor = -PSD_CLAMP_TOL * max(lam_max, 0.0)
    if np.any(dec.eigenvalues < floor):
        raise NotPSD(
            f"eigenvalue {dec.eigenvalues.min():.3e} below the clamping window {floor:.3e}"
        )
    clamped = np.clip(dec.eigenvalues, 0.0, None)
    return EigenDecomposition(eigenvalues=clamped, eigenvectors=dec.eigenvectors)


def psd_sqrt(A) -> np.ndarray:
    """Hermitian PSD square root of a Hermitian PSD matrix."""
    dec = _psd_eig(A)
    V = dec.eigenvectors
    R = (V * np.sqrt(dec.eigenvalues)) @ V.conj().T
    return (R + R.conj().T) / 2.0


def pinv_psd(A) -> np.ndarray:
    """Moore-Penrose pseudoinverse of a Hermitian PSD matrix.

    Eigenvalues above n*eps*lambda_max are inverted, the rest zeroed.
    """
    dec = _psd_eig(A)
    cut = rank_tolerance(dec.eigenvalues)
    inv = np.where(dec.eigenvalues > cut, 1.0 / np.where(dec.eigenvalues > cut, dec.eigenvalues, 1.0), 0.0)
    V = dec.eigenvectors
    P = (V * inv) @ V.conj().T
    return (P + P.conj().T) / 2.0


def psd_rank(A) -> int:
    """Number of eigenvalues above the pseudoinverse rank cutoff."""
    dec = _psd_eig(A)
    return int(np.sum(dec.eigenvalues > rank_tolerance(dec.eigenvalues)))


def proj_range(A) -> np.ndarray:
    """Orthogonal projection onto the range of a Hermitian PSD matrix."""
    dec = _psd_eig(A)
    cut = rank_tolerance(dec.eigenvalues)
    keep = dec.eigenvalues > cut
    V = dec.eigenvectors[:, keep]
    P = V @ V.conj().T
    return (P + P.conj().T) / 2.0


def _radius_objective(M: np.ndarray, theta: float) -> float:
    H = (np.exp(1j * theta) * M + np.exp(-1j * theta) * M.conj().T) / 2.0
    return float(np.linalg.eigvalsh(H)[-1])


def numerical_radius(M) -> float:
    """Classical numerical radius via angular sweep.

    Evaluates lambda_max of the rotated Hermitian part on a uniform grid of
    720 angles over [0, 2pi), then refines around the best grid cell by
    golden-section search down to angular width 1e-12.
    """
    M = _require_square(M)
    n = M.shape[0]
    if n == 0:
        return 0.0
    thetas = np.linspace(0.0, 2.0 * np.pi, RADIUS_GRID_POINTS, endpoint=False)
    phases = np.exp(1j * thetas)
    stack = 0.5 * (phases[:, None, None] * M + np.conj(phases)[:, None, None] * M.conj().T)
    values = np.linalg.eigvalsh(stack)[:, -1]
    k = int(np.argmax(values))
    step = 2.0 * np.pi / RADIUS_GRID_POINTS
    lo, hi = thetas[k] - step, thetas[k] + step

    # Fine sub-grid inside the winning cell guards against kinks of the
    # piecewise-smooth support function before the unimodal refinement.
    fine = np.linspace(lo, hi, 201)
    ph = np.exp(1j * fine)
    stack = 0.5 * (ph[:, None, None] * M + np.conj(ph)[:, None, None] * M.conj().T)
    fine_vals = np.linalg.eigvalsh(stack)[:, -1]
    j = int(np.argmax(fine_vals))
    substep = (hi - lo) / 200.0

    # Golden-section maximization of the (locally unimodal) support function.
    a, b = fine[j] - substep, fine[j] + substep
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _radius_objective(M, c)
    fd = _radius_objective(M, d)
    while (b - a) > RADIUS_ANGLE_WIDTH:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _radius_objective(M, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _radius_objective(M, d)
    return max(float(values[k]), float(fine_vals[j]), fc, fd)


def numerical_radius_grid(M, points: int = 100_000) -> float:
    """Brute-force numerical radius on a dense uniform angular grid.

    Independent of :func:`numerical_radius`; used as an oracle in tests.
    """
    M = _require_square(M)
    thetas = np.linspace(0.0, 2.0 * np.pi, points, endpoint=False)
    best = -np.inf
    chunk = 20_000
    for start in range(0, points, chunk):
        ph = np.exp(1j * thetas[start : start + chunk])
        stack = 0.5 * (ph[:, None, None] * M + np.conj(ph)[:, None, None] * M.conj().T)
        best = max(best, float(np.linalg.eigvalsh(stack)[:, -1].max()))
    return best
