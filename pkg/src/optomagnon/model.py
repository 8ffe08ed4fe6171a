"""Model parameters and the truncated single-site polariton basis.

One lattice site couples a cavity photon mode, a magnon mode and a
two-level atom.  The conserved total excitation number N = n + m + s
(s = 1 for the excited atom) organizes the Fock space into sectors;
sector N holds 2N+1 states and the basis truncated at N <= n_max has
dimension (n_max + 1)**2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from functools import cached_property
from typing import NamedTuple

GROUND = "g"
EXCITED = "e"


class FockState(NamedTuple):
    """Single-site product state |n photons, m magnons, atom g/e>."""

    n: int
    m: int
    atom: str

    @property
    def excited(self) -> int:
        return 1 if self.atom == EXCITED else 0

    @property
    def total(self) -> int:
        return self.n + self.m + self.excited


@dataclass(frozen=True)
class ModelParams:
    """Physical and numerical parameters, energies in units of g_a.

    omega_c is the cavity frequency; the atom and magnon frequencies are
    derived from the detunings, omega_a = omega_c + delta_a and
    omega_m = omega_c + delta_m.  kappa is the photon hopping rate between
    neighbouring cavities, z the number of neighbours, mu the chemical
    potential and n_max the total-excitation cutoff.
    """

    omega_c: float = 0.0
    delta_a: float = 0.0
    delta_m: float = 0.0
    g_a: float = 1.0
    g_m: float = 0.0
    mu: float = 0.0
    kappa: float = 0.0
    z: int = 4
    n_max: int = 8

    @property
    def omega_a(self) -> float:
        return self.omega_c + self.delta_a

    @property
    def omega_m(self) -> float:
        return self.omega_c + self.delta_m

    @property
    def resonant(self) -> bool:
        return abs(self.delta_a) <= 1e-12 and abs(self.delta_m) <= 1e-12


def validate_params(p: ModelParams) -> ModelParams:
    """Return p unchanged if valid, else raise ValueError naming every violation."""
    problems = []
    if not p.g_a > 0:
        problems.append("g_a must be positive (it sets the energy scale)")
    if p.g_m < 0:
        problems.append("g_m must be non-negative")
    if p.kappa < 0:
        problems.append("kappa must be non-negative")
    if int(p.z) != p.z or p.z < 1:
        problems.append("z must be an integer >= 1")
    if int(p.n_max) != p.n_max or p.n_max < 1:
        problems.append("n_max must be an integer >= 1")
    for name in ("omega_c", "delta_a", "delta_m", "g_a", "g_m", "mu", "kappa"):
        if not math.isfinite(getattr(p, name)):
            problems.append(f"{name} must be finite")
    if problems:
        raise ValueError("invalid parameters: " + "; ".join(problems))
    return p


def params_as_dict(p: ModelParams) -> dict:
    """Plain dict of the parameter fields (for metadata and configs)."""
    return {f.name: getattr(p, f.name) for f in fields(p)}


def build_sector_basis(N: int) -> tuple[FockState, ...]:
    """Canonical ordering of the 2N+1 states with total excitation N.

    Excited-atom states |N-1-m, m, e> (m = 0..N-1) come first, then the
    ground-atom states |N-m, m, g> (m = 0..N); the magnon count increases
    within each block.
    """
    if N < 0:
        raise ValueError(f"sector index must be >= 0, got {N}")
    excited = [FockState(N - 1 - m, m, EXCITED) for m in range(N)]
    ground = [FockState(N - m, m, GROUND) for m in range(N + 1)]
    return tuple(excited + ground)


@dataclass(frozen=True)
class Basis:
    """Concatenated sector bases for N = 0..n_max."""

    n_max: int
    states: tuple[FockState, ...]
    sector_offsets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return len(self.states)

    @cached_property
    def _index(self) -> dict[FockState, int]:
        return {s: i for i, s in enumerate(self.states)}

    def index_of(self, state: FockState) -> int:
        return self._index[state]

    def sector_slice(self, N: int) -> slice:
        start = self.sector_offsets[N]
        stop = self.sector_offsets[N + 1] if N + 1 <= self.n_max else self.dim
        return slice(start, stop)

    def sector_of_index(self, i: int) -> int:
        return self.states[i].total


def build_full_basis(n_max: int) -> Basis:
    """All sectors N = 0..n_max in canonical order; dimension (n_max+1)**2."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    states: list[FockState] = []
    offsets: list[int] = []
    for N in range(n_max + 1):
        offsets.append(len(states))
        states.extend(build_sector_basis(N))
    basis = Basis(n_max=n_max, states=tuple(states), sector_offsets=tuple(offsets))
    assert basis.dim == (n_max + 1) ** 2
    return basis
