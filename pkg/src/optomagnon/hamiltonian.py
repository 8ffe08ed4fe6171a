"""Dense single-site mean-field Hamiltonian assembly.

The on-site Hamiltonian conserves the total excitation number, so it is
block diagonal over sectors.  The mean-field hopping term
-z*kappa*psi*(a^dag + a) couples adjacent sectors through the bosonic
ladder rule <n+1|a^dag|n> = sqrt(n+1); the printed block patterns are
only used as cross-checks in the test suite, the assembler works from
the operator matrix elements.

All matrices are built exactly symmetric: every off-diagonal element is
written to (i, j) and (j, i) from the same float.
"""
from __future__ import annotations

import math

import numpy as np

from .model import Basis, ModelParams, build_full_basis, build_sector_basis, validate_params


def onsite_block(p: ModelParams, N: int) -> np.ndarray:
    """(2N+1) x (2N+1) sector Hamiltonian in the canonical sector basis.

    Diagonal: n*omega_c + m*omega_m + s*omega_a - N*mu.  Off-diagonal:
    g_m*sqrt(n*(m+1)) between |n,m,s> and |n-1,m+1,s> (photon <-> magnon)
    and g_a*sqrt(n+1) between |n,m,e> and |n+1,m,g> (photon <-> atom).
    """
    if N > p.n_max:
        raise ValueError(f"sector N={N} exceeds the cutoff n_max={p.n_max}")
    states = build_sector_basis(N)
    index = {s: i for i, s in enumerate(states)}
    H = np.zeros((len(states), len(states)))
    for i, s in enumerate(states):
        H[i, i] = s.n * p.omega_c + s.m * p.omega_m + s.excited * p.omega_a - N * p.mu
        if s.n >= 1:
            j = index.get(type(s)(s.n - 1, s.m + 1, s.atom))
            if j is not None:
                v = p.g_m * math.sqrt(s.n * (s.m + 1))
                H[i, j] = v
                H[j, i] = v
        if s.excited:
            j = index.get(type(s)(s.n + 1, s.m, "g"))
            if j is not None:
                v = p.g_a * math.sqrt(s.n + 1)
                H[i, j] = v
                H[j, i] = v
    return H


def hop_block(N: int) -> np.ndarray:
    """Raw photon-creation elements from sector N into sector N+1.

    Entry (i, j) = <sector-N+1 state j| a^dag |sector-N state i>, i.e.
    sqrt(n_i + 1) where states i, j share magnon and atom labels.  Each
    row has exactly one nonzero.  The assembled Hamiltonian scales this
    block by -z*kappa*psi.
    """
    if N < 0:
        raise ValueError(f"sector index must be >= 0, got {N}")
    lower = build_sector_basis(N)
    upper = {s: j for j, s in enumerate(build_sector_basis(N + 1))}
    K = np.zeros((len(lower), len(upper)))
    for i, s in enumerate(lower):
        j = upper[type(s)(s.n + 1, s.m, s.atom)]
        K[i, j] = math.sqrt(s.n + 1)
    return K


def mf_parts(p: ModelParams, basis: Basis | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Psi-independent pieces of the mean-field matrix.

    Returns (D, A): the block-diagonal on-site part D and the symmetric
    raw photon-quadrature matrix A (elements of a^dag + a), so that the
    full matrix is D - z*kappa*psi*A + z*kappa*psi**2 * I.  Callers that
    scan over psi reuse these parts.
    """
    basis = basis or build_full_basis(p.n_max)
    dim = basis.dim
    D = np.zeros((dim, dim))
    A = np.zeros((dim, dim))
    for N in range(p.n_max + 1):
        sl = basis.sector_slice(N)
        D[sl, sl] = onsite_block(p, N)
    for N in range(p.n_max):
        lo = basis.sector_slice(N)
        hi = basis.sector_slice(N + 1)
        K = hop_block(N)
        A[lo, hi] = K
        A[hi, lo] = K.T
    return D, A


def assemble_from_parts(D: np.ndarray, A: np.ndarray, p: ModelParams, psi: float) -> np.ndarray:
    """D - z*kappa*psi*A + z*kappa*psi**2 on the diagonal."""
    zk = p.z * p.kappa
    H = D + (-zk * psi) * A
    H[np.diag_indices_from(H)] += zk * psi * psi
    return H


def assemble_mf_hamiltonian(p: ModelParams, psi: float) -> np.ndarray:
    """Full (n_max+1)**2 mean-field matrix at order parameter psi."""
    validate_params(p)
    D, A = mf_parts(p)
    return assemble_from_parts(D, A, p, psi)


def number_diagonals(basis: Basis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-state photon count, magnon count and atom excitation (0/1)."""
    n = np.array([s.n for s in basis.states], dtype=float)
    m = np.array([s.m for s in basis.states], dtype=float)
    e = np.array([float(s.excited) for s in basis.states])
    return n, m, e
