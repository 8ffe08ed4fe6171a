"""Order-parameter minimization and observables at one parameter point.

The order parameter is found variationally: psi* minimizes the lowest
eigenvalue of the mean-field matrix over psi >= 0 (the energy is even in
psi, so the negative axis is redundant).  Stationarity of that scalar
minimization implies the self-consistency psi = <a>, which is recorded
as a residual rather than iterated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .eigensolver import eigen_ground, ground_value, ground_values_batch
from .errors import TruncationLimitError
from .hamiltonian import assemble_from_parts, mf_parts, number_diagonals
from .model import Basis, ModelParams, build_full_basis, validate_params

PSI_TOL = 1e-4          # Mott / superfluid classification threshold
MINIMIZER_TOL = 1e-8    # golden-section bracket width
COARSE_POINTS = 41      # coarse scan resolution over [0, psi_max]

MOTT = "Mott"
SUPERFLUID = "Superfluid"

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MeanFieldPoint:
    """Converged result at one (kappa, mu, ...) parameter point."""

    psi_star: float
    ground_energy: float
    ground_vector: np.ndarray
    n_avg: float
    m_avg: float
    sigma_avg: float
    ntot_avg: float
    sc_residual: float
    phase: str


def ground_energy(p: ModelParams, psi: float) -> float:
    """Lowest eigenvalue of the assembled mean-field matrix at psi."""
    validate_params(p)
    D, A = mf_parts(p)
    return ground_value(assemble_from_parts(D, A, p, psi))


def classify_phase(point, psi_tol: float = PSI_TOL) -> str:
    """Mott iff psi* < psi_tol."""
    psi = getattr(point, "psi_star", point)
    return MOTT if psi < psi_tol else SUPERFLUID


def _expectations(vector: np.ndarray, basis: Basis, A: np.ndarray):
    n_diag, m_diag, e_diag = number_diagonals(basis)
    n = float(vector @ (n_diag * vector))
    m = float(vector @ (m_diag * vector))
    e = float(vector @ (e_diag * vector))
    a_exp = 0.5 * float(vector @ A @ vector)  # <a> = <a + a^dag>/2 for real vectors
    return n, m, e, a_exp


def _golden_min(energy, lo: float, hi: float, tol: float):
    """Golden-section minimum on [lo, hi]; ties shrink toward lo."""
    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = energy(x1), energy(x2)
    best_x, best_f = (x1, f1) if f1 <= f2 else (x2, f2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = energy(x1)
            if f1 < best_f:
                best_x, best_f = x1, f1
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = energy(x2)
            if f2 < best_f:
                best_x, best_f = x2, f2
    return best_x, best_f


def minimize_order_parameter(p: ModelParams, psi_tol: float = PSI_TOL) -> MeanFieldPoint:
    """Locate psi* = argmin of the ground energy over psi in [0, sqrt(n_max)].

    Coarse scan over COARSE_POINTS points followed by golden-section
    refinement of the bracketing cell down to MINIMIZER_TOL.  A coarse
    minimum on the psi_max boundary raises TruncationLimitError: the
    photon amplitude is then limited by the cutoff, not by physics.
    """
    validate_params(p)
    basis = build_full_basis(p.n_max)
    D, A = mf_parts(p, basis)
    zk = p.z * p.kappa

    def energy(psi: float) -> float:
        return ground_value(assemble_from_parts(D, A, p, psi))

    psi_max = math.sqrt(p.n_max)
    grid = np.linspace(0.0, psi_max, COARSE_POINTS)
    stack = D[None, :, :] + (-zk * grid)[:, None, None] * A[None, :, :]
    diag = np.arange(basis.dim)
    stack[:, diag, diag] += (zk * grid * grid)[:, None]
    coarse = ground_values_batch(stack)

    i = int(np.argmin(coarse))
    if i == COARSE_POINTS - 1:
        raise TruncationLimitError(psi_max, p.n_max)
    lo = grid[i - 1] if i > 0 else grid[0]
    hi = grid[i + 1]
    psi_best, e_best = _golden_min(energy, float(lo), float(hi), MINIMIZER_TOL)
    if coarse[i] < e_best:
        psi_best, e_best = float(grid[i]), float(coarse[i])
    # tie-break toward the insulating solution: psi = 0 wins unless it loses
    if energy(0.0) <= e_best:
        psi_best = 0.0

    pair = eigen_ground(assemble_from_parts(D, A, p, psi_best))
    n, m, e, a_exp = _expectations(pair.vector, basis, A)
    return MeanFieldPoint(
        psi_star=psi_best,
        ground_energy=pair.value,
        ground_vector=pair.vector,
        n_avg=n,
        m_avg=m,
        sigma_avg=e,
        ntot_avg=n + m + e,
        sc_residual=abs(psi_best - a_exp),
        phase=classify_phase(psi_best, psi_tol),
    )


def observables(point: MeanFieldPoint, basis: Basis):
    """(⟨N⟩, ⟨n⟩, ⟨m⟩, ⟨sigma^dag sigma⟩, ⟨a⟩) of a solved point."""
    n, m, e, a_exp = _expectations(point.ground_vector, basis, _quadrature_matrix(basis))
    return n + m + e, n, m, e, a_exp


def _quadrature_matrix(basis: Basis) -> np.ndarray:
    """Symmetric matrix of a + a^dag in the full basis."""
    from .hamiltonian import hop_block

    A = np.zeros((basis.dim, basis.dim))
    for N in range(basis.n_max):
        lo = basis.sector_slice(N)
        hi = basis.sector_slice(N + 1)
        K = hop_block(N)
        A[lo, hi] = K
        A[hi, lo] = K.T
    return A


def effective_repulsion(p: ModelParams, N: int) -> float:
    """Energy cost of the (N+1)-th excitation beyond the photon quantum.

    Difference of adjacent bare (mu = 0) sector ground energies minus
    omega_c; the chemical potential cancels in the difference.
    """
    from .hamiltonian import onsite_block

    validate_params(p)
    if N + 1 > p.n_max:
        raise ValueError(f"repulsion U_{N} needs sector {N + 1} <= n_max={p.n_max}")
    bare = replace(p, mu=0.0)
    return (
        ground_value(onsite_block(bare, N + 1))
        - ground_value(onsite_block(bare, N))
        - p.omega_c
    )


def cutoff_convergence(p: ModelParams, step: int = 4) -> tuple[float, float]:
    """(|d psi*|, |d E_g|) between cutoffs n_max and n_max + step."""
    validate_params(p)
    here = minimize_order_parameter(p)
    bigger = minimize_order_parameter(replace(p, n_max=p.n_max + step))
    return (
        abs(here.psi_star - bigger.psi_star),
        abs(here.ground_energy - bigger.ground_energy),
    )
