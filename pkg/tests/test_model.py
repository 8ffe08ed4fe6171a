"""Parameter validation and polariton basis layout."""
import pytest

from optomagnon.model import (
    FockState,
    ModelParams,
    build_full_basis,
    build_sector_basis,
    validate_params,
)


def brute_force_sector(N):
    """Independent enumeration of all (n, m, atom) with n + m + s == N."""
    out = set()
    for n in range(N + 1):
        for m in range(N + 1):
            for atom in ("g", "e"):
                s = 1 if atom == "e" else 0
                if n + m + s == N:
                    out.add((n, m, atom))
    return out


class TestValidateParams:
    def test_defaults_valid(self):
        p = ModelParams()
        assert validate_params(p) is p

    def test_zero_ga_rejected(self):
        with pytest.raises(ValueError, match="g_a"):
            validate_params(ModelParams(g_a=0.0))

    def test_zero_cutoff_rejected(self):
        with pytest.raises(ValueError, match="n_max"):
            validate_params(ModelParams(n_max=0))

    def test_all_violations_reported(self):
        with pytest.raises(ValueError) as err:
            validate_params(ModelParams(g_a=-1.0, g_m=-0.5, kappa=-2.0, z=0, n_max=0))
        msg = str(err.value)
        for name in ("g_a", "g_m", "kappa", "z", "n_max"):
            assert name in msg

    def test_nonfinite_frequency_rejected(self):
        with pytest.raises(ValueError, match="mu"):
            validate_params(ModelParams(mu=float("nan")))

    def test_derived_frequencies(self):
        p = ModelParams(omega_c=1.5, delta_a=0.3, delta_m=-0.2)
        assert p.omega_a == pytest.approx(1.8)
        assert p.omega_m == pytest.approx(1.3)


class TestSectorBasis:
    def test_sector_zero(self):
        assert build_sector_basis(0) == (FockState(0, 0, "g"),)

    def test_sector_one_order(self):
        assert build_sector_basis(1) == (
            FockState(0, 0, "e"),
            FockState(1, 0, "g"),
            FockState(0, 1, "g"),
        )

    def test_sector_two_order(self):
        assert build_sector_basis(2) == (
            FockState(1, 0, "e"),
            FockState(0, 1, "e"),
            FockState(2, 0, "g"),
            FockState(1, 1, "g"),
            FockState(0, 2, "g"),
        )

    def test_negative_sector_rejected(self):
        with pytest.raises(ValueError):
            build_sector_basis(-1)

    @pytest.mark.parametrize("N", range(7))
    def test_size_and_content(self, N):
        states = build_sector_basis(N)
        assert len(states) == 2 * N + 1
        assert {(s.n, s.m, s.atom) for s in states} == brute_force_sector(N)

    @pytest.mark.parametrize("N", range(1, 7))
    def test_block_layout(self, N):
        states = build_sector_basis(N)
        excited, ground = states[:N], states[N:]
        assert all(s.atom == "e" for s in excited)
        assert all(s.atom == "g" for s in ground)
        assert [s.m for s in excited] == list(range(N))
        assert [s.m for s in ground] == list(range(N + 1))


class TestFullBasis:
    def test_small(self):
        basis = build_full_basis(1)
        assert basis.dim == 4
        assert basis.sector_offsets == (0, 1)

    def test_sixteen_states(self):
        assert build_full_basis(3).dim == 16

    def test_production_cutoff(self):
        assert build_full_basis(20).dim == 441

    def test_invalid_cutoff(self):
        with pytest.raises(ValueError):
            build_full_basis(0)

    @pytest.mark.parametrize("n_max", range(1, 26))
    def test_dimension_formula(self, n_max):
        assert build_full_basis(n_max).dim == (n_max + 1) ** 2

    def test_index_bijection(self):
        basis = build_full_basis(9)
        for i, state in enumerate(basis.states):
            assert basis.index_of(state) == i
        assert len(set(basis.states)) == basis.dim

    def test_sector_membership(self):
        basis = build_full_basis(9)
        for N in range(10):
            sl = basis.sector_slice(N)
            assert sl.stop - sl.start == 2 * N + 1
            for state in basis.states[sl]:
                assert state.total == N

    def test_sector_of_index(self):
        basis = build_full_basis(5)
        for i in range(basis.dim):
            N = basis.sector_of_index(i)
            assert basis.sector_slice(N).start <= i < basis.sector_slice(N).stop
