"""Shared fixtures: the 2x2 reference space and seeded random data."""

import numpy as np
import pytest

from semihilbert.space import make_space

A_REF = np.array([[1.0, -1.0], [-1.0, 2.0]], dtype=complex)
T_LOWER = np.array([[1.0, 0.0], [1.0, 1.0]], dtype=complex)
T_UPPER = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)


@pytest.fixture(scope="session")
def ref_space():
    return make_space(A_REF)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian(rng, n):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (G + G.conj().T) / 2.0


def random_psd(rng, n, rank=None):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    if rank is not None:
        G = G[:rank, :]
    A = G.conj().T @ G
    return (A + A.conj().T) / 2.0
