"""Mean-field matrix assembly against hand-built and printed-pattern oracles."""
import math

import numpy as np
import pytest

from optomagnon.hamiltonian import (
    assemble_mf_hamiltonian,
    hop_block,
    mf_parts,
    number_diagonals,
    onsite_block,
)
from optomagnon.model import ModelParams, build_full_basis

P_GENERIC = ModelParams(
    omega_c=1.3, delta_a=0.2, delta_m=-0.4, g_a=1.0, g_m=0.8, mu=0.33, n_max=6
)


def printed_onsite_block(p: ModelParams, N: int) -> np.ndarray:
    """Transcription of the printed block patterns (independent oracle).

    Ground-atom block: diagonal (N-m)w_c + m*w_m - N*mu with couplings
    sqrt((m+1)(N-m)) g_m; excited-atom block: diagonal
    w_a + (N-1-m)w_c + m*w_m - N*mu with couplings sqrt((m+1)(N-1-m)) g_m;
    rectangular atom-photon block diag(sqrt(N) g_a ... g_a) plus a zero
    column.
    """
    H1 = np.zeros((N + 1, N + 1))
    for m in range(N + 1):
        H1[m, m] = (N - m) * p.omega_c + m * p.omega_m - N * p.mu
        if m < N:
            H1[m, m + 1] = H1[m + 1, m] = math.sqrt((m + 1) * (N - m)) * p.g_m
    H2 = np.zeros((N, N))
    for m in range(N):
        H2[m, m] = p.omega_a + (N - 1 - m) * p.omega_c + m * p.omega_m - N * p.mu
        if m < N - 1:
            H2[m, m + 1] = H2[m + 1, m] = math.sqrt((m + 1) * (N - 1 - m)) * p.g_m
    B = np.zeros((N, N + 1))
    for i in range(N):
        B[i, i] = math.sqrt(N - i) * p.g_a
    top = np.hstack([H2, B])
    bottom = np.hstack([B.T, H1])
    return np.vstack([top, bottom])


class TestOnsiteBlock:
    def test_sector_zero_is_null(self):
        H = onsite_block(P_GENERIC, 0)
        assert H.shape == (1, 1)
        assert H[0, 0] == 0.0

    def test_sector_one_matrix(self):
        p = P_GENERIC
        want = np.array(
            [
                [p.omega_a - p.mu, p.g_a, 0.0],
                [p.g_a, p.omega_c - p.mu, p.g_m],
                [0.0, p.g_m, p.omega_m - p.mu],
            ]
        )
        assert np.allclose(onsite_block(p, 1), want, rtol=0, atol=1e-14)

    def test_sector_two_ground_block(self):
        p = P_GENERIC
        H = onsite_block(p, 2)
        g_block = H[2:, 2:]
        want_diag = np.array(
            [2 * p.omega_c, p.omega_c + p.omega_m, 2 * p.omega_m]
        ) - 2 * p.mu
        assert np.allclose(np.diag(g_block), want_diag, rtol=0, atol=1e-14)
        assert g_block[0, 1] == pytest.approx(math.sqrt(2) * p.g_m, abs=1e-15)
        assert g_block[1, 2] == pytest.approx(math.sqrt(2) * p.g_m, abs=1e-15)
        assert g_block[0, 2] == 0.0

    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    def test_printed_pattern_fidelity(self, N):
        got = onsite_block(P_GENERIC, N)
        want = printed_onsite_block(P_GENERIC, N)
        assert np.allclose(got, want, rtol=0, atol=1e-12)

    def test_exceeding_cutoff_rejected(self):
        with pytest.raises(ValueError, match="cutoff"):
            onsite_block(ModelParams(n_max=3), 4)

    def test_exact_symmetry(self):
        for N in range(5):
            H = onsite_block(P_GENERIC, N)
            assert np.array_equal(H, H.T)


class TestHopBlock:
    def test_vacuum_row(self):
        K = hop_block(0)
        assert K.shape == (1, 3)
        # |0,0,g> -> |1,0,g>, the second state of sector 1
        want = np.zeros((1, 3))
        want[0, 1] = 1.0
        assert np.array_equal(K, want)

    def test_sector_one_elements(self):
        K = hop_block(1)
        assert K.shape == (3, 5)
        # sector 2 order: |1,0,e>, |0,1,e>, |2,0,g>, |1,1,g>, |0,2,g>
        assert K[0, 0] == 1.0            # a^dag |0,0,e> = |1,0,e>
        assert K[1, 2] == math.sqrt(2.0)  # a^dag |1,0,g> = sqrt(2) |2,0,g>
        assert K[2, 3] == 1.0            # a^dag |0,1,g> = |1,1,g>
        assert np.count_nonzero(K) == 3

    @pytest.mark.parametrize("N", range(6))
    def test_one_nonzero_per_row(self, N):
        K = hop_block(N)
        assert K.shape == (2 * N + 1, 2 * N + 3)
        assert (np.count_nonzero(K, axis=1) == 1).all()

    @pytest.mark.parametrize("N", range(5))
    def test_ladder_rule(self, N):
        from optomagnon.model import build_sector_basis

        K = hop_block(N)
        lower = build_sector_basis(N)
        upper = build_sector_basis(N + 1)
        for i, s in enumerate(lower):
            (j,) = np.nonzero(K[i])[0]
            t = upper[j]
            assert (t.n, t.m, t.atom) == (s.n + 1, s.m, s.atom)
            assert K[i, j] == math.sqrt(s.n + 1)

    def test_negative_sector_rejected(self):
        with pytest.raises(ValueError):
            hop_block(-1)


class TestAssemble:
    def test_dimension(self):
        H = assemble_mf_hamiltonian(P_GENERIC, 0.3)
        assert H.shape == ((P_GENERIC.n_max + 1) ** 2,) * 2

    def test_psi_zero_block_diagonal(self):
        p = ModelParams(g_m=0.8, kappa=0.7, mu=-1.2, n_max=6)
        H = assemble_mf_hamiltonian(p, 0.0)
        basis = build_full_basis(p.n_max)
        for i in range(basis.dim):
            for j in range(basis.dim):
                if basis.sector_of_index(i) != basis.sector_of_index(j):
                    assert H[i, j] == 0.0

    def test_kappa_zero_matches_psi_zero(self):
        p = ModelParams(g_m=0.8, kappa=0.0, mu=-1.2, n_max=5)
        assert np.array_equal(
            assemble_mf_hamiltonian(p, 0.3), assemble_mf_hamiltonian(p, 0.0)
        )

    def test_hand_assembled_two_sector_example(self):
        # resonance omega = 1, g_a = 1, g_m = 0.8, z*kappa*psi = 0.1;
        # basis order |0,0,g>, |0,0,e>, |1,0,g>, |0,1,g>
        p = ModelParams(omega_c=1.0, g_m=0.8, kappa=0.25, z=4, n_max=1)
        H = assemble_mf_hamiltonian(p, 0.1)
        shift = 0.01  # z*kappa*psi**2
        want = np.array(
            [
                [shift, 0.0, -0.1, 0.0],
                [0.0, 1.0 + shift, 1.0, 0.0],
                [-0.1, 1.0, 1.0 + shift, 0.8],
                [0.0, 0.0, 0.8, 1.0 + shift],
            ]
        )
        assert np.allclose(H, want, rtol=0, atol=1e-15)

    def test_bit_exact_symmetry_random_draws(self):
        rng = np.random.default_rng(42)
        for _ in range(5):
            p = ModelParams(
                omega_c=rng.uniform(-1, 2),
                delta_a=rng.uniform(-1, 1),
                delta_m=rng.uniform(-1, 1),
                g_a=rng.uniform(0.2, 1.5),
                g_m=rng.uniform(0, 1.5),
                mu=rng.uniform(-2, 1),
                kappa=rng.uniform(0, 1),
                n_max=6,
            )
            H = assemble_mf_hamiltonian(p, rng.uniform(-1.5, 1.5))
            assert np.array_equal(H, H.T)

    def test_total_number_conservation_at_psi_zero(self):
        p = ModelParams(g_m=0.8, kappa=0.9, mu=-1.0, n_max=8)
        H = assemble_mf_hamiltonian(p, 0.0)
        basis = build_full_basis(p.n_max)
        n, m, e = number_diagonals(basis)
        tot = n + m + e
        commutator = H * tot[None, :] - tot[:, None] * H
        assert np.abs(commutator).max() == 0.0

    def test_magnon_decoupling_at_gm_zero(self):
        p = ModelParams(g_m=0.0, kappa=0.4, mu=-0.7, n_max=5)
        H = assemble_mf_hamiltonian(p, 0.6)
        basis = build_full_basis(p.n_max)
        m_count = np.array([s.m for s in basis.states])
        different_m = m_count[:, None] != m_count[None, :]
        assert np.abs(H[different_m]).max() == 0.0

    def test_mu_shift_covariance(self):
        from dataclasses import replace

        p = ModelParams(g_m=0.8, kappa=0.3, mu=-1.1, n_max=6)
        delta = 0.37
        H1 = assemble_mf_hamiltonian(p, 0.4)
        H2 = assemble_mf_hamiltonian(replace(p, mu=p.mu + delta), 0.4)
        basis = build_full_basis(p.n_max)
        diff = H2 - H1
        off_diagonal = diff - np.diag(np.diag(diff))
        assert np.abs(off_diagonal).max() == 0.0
        for i in range(basis.dim):
            N = basis.sector_of_index(i)
            assert diff[i, i] == pytest.approx(-N * delta, abs=1e-12)

    def test_parts_match_direct_assembly(self):
        p = ModelParams(g_m=0.8, kappa=0.3, mu=-1.1, n_max=5)
        basis = build_full_basis(p.n_max)
        D, A = mf_parts(p, basis)
        from optomagnon.hamiltonian import assemble_from_parts

        assert np.array_equal(
            assemble_from_parts(D, A, p, 0.27), assemble_mf_hamiltonian(p, 0.27)
        )


class TestNumberDiagonals:
    def test_examples(self):
        basis = build_full_basis(4)
        n, m, e = number_diagonals(basis)
        i0 = basis.index_of(basis.states[0])
        assert (n[i0], m[i0], e[i0]) == (0.0, 0.0, 0.0)
        from optomagnon.model import FockState

        j = basis.index_of(FockState(1, 1, "g"))
        assert (n[j], m[j], e[j]) == (1.0, 1.0, 0.0)
        assert n[j] + m[j] + e[j] == 2.0

    def test_sector_totals(self):
        basis = build_full_basis(8)
        n, m, e = number_diagonals(basis)
        tot = n + m + e
        for N in range(9):
            assert (tot[basis.sector_slice(N)] == N).all()
