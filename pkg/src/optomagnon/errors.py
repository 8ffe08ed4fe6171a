"""Exception types shared across the solver."""


class DegenerateGapError(ArithmeticError):
    """A perturbative energy denominator is too small to divide by."""

    def __init__(self, name: str, gap: float, limit: float = 1e-12):
        self.name = name
        self.gap = gap
        self.limit = limit
        super().__init__(
            f"energy gap '{name}' = {gap:.3e} is below the safe limit {limit:.0e}"
        )


class TruncationLimitError(RuntimeError):
    """The order-parameter minimizer ran into the Fock-space cutoff."""

    def __init__(self, psi_max: float, n_max: int):
        self.psi_max = psi_max
        self.n_max = n_max
        super().__init__(
            f"minimizer reached the boundary psi_max = {psi_max:.4g} at "
            f"n_max = {n_max}; increase the excitation cutoff"
        )


class LobeBranchError(ValueError):
    """Requested analytic critical-hopping branch does not apply here."""
