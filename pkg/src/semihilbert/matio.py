"""Shared matrix file format.

A matrix file is a JSON document with fields ``rows`` (int), ``cols``
(int) and ``data`` (row-major list of ``[re, im]`` pairs). Space files
carry the same payload for the weight matrix plus a ``tol`` field.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InvalidConfig


def matrix_to_dict(M: np.ndarray) -> dict:
    M = np.asarray(M, dtype=complex)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in M.ravel(order="C")],
    }


def matrix_from_dict(doc: dict) -> np.ndarray:
    try:
        rows = int(doc["rows"])
        cols = int(doc["cols"])
        data = doc["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidConfig(f"malformed matrix document: {exc}") from exc
    if rows < 1 or cols < 1:
        raise InvalidConfig("rows and cols must be positive")
    if len(data) != rows * cols:
        raise InvalidConfig(f"data length {len(data)} does not match rows*cols={rows * cols}")
    try:
        flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InvalidConfig(f"matrix entries must be [re, im] pairs: {exc}") from exc
    if not np.all(np.isfinite(flat.real)) or not np.all(np.isfinite(flat.imag)):
        raise InvalidConfig("matrix entries must be finite")
    return flat.reshape(rows, cols)


def save_matrix(path, M: np.ndarray) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(M), indent=2) + "\n")


def load_matrix(path) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidConfig(f"cannot read matrix file {path}: {exc}") from exc
    return matrix_from_dict(doc)


def load_vector(path) -> np.ndarray:
    M = load_matrix(path)
    if 1 not in M.shape:
        raise InvalidConfig(f"expected a vector file, got shape {M.shape}")
    return M.ravel()
