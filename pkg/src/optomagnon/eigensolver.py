"""Dense real-symmetric eigendecomposition used by every consumer.

Thin wrapper over LAPACK via numpy.linalg; the contract (residual
<= 1e-10 * max(1, ||H||_F), orthonormal vectors, ascending values) is
what downstream code relies on and is what the test suite asserts.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray


def _check(H: np.ndarray) -> np.ndarray:
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if not np.isfinite(H).all():
        raise ValueError("matrix contains non-finite entries")
    if not np.array_equal(H, H.T):
        raise ValueError("matrix is not exactly symmetric")
    return H


def eigen_full(H: np.ndarray) -> list[EigenPair]:
    """All eigenpairs of a symmetric matrix, values ascending."""
    H = _check(H)
    values, vectors = np.linalg.eigh(H)
    return [EigenPair(float(values[k]), vectors[:, k].copy()) for k in range(len(values))]


def eigen_ground(H: np.ndarray) -> EigenPair:
    """The minimum eigenpair."""
    H = _check(H)
    values, vectors = np.linalg.eigh(H)
    return EigenPair(float(values[0]), vectors[:, 0].copy())


def ground_value(H: np.ndarray) -> float:
    """Lowest eigenvalue only (no vectors); fast path for energy scans."""
    H = _check(H)
    return float(np.linalg.eigvalsh(H)[0])


def ground_values_batch(Hs: np.ndarray) -> np.ndarray:
    """Lowest eigenvalue of each matrix in a (k, d, d) stack."""
    Hs = np.asarray(Hs, dtype=float)
    if not np.isfinite(Hs).all():
        raise ValueError("matrix stack contains non-finite entries")
    return np.linalg.eigvalsh(Hs)[:, 0]
