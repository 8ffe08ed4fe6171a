"""Mean-field Mott-insulator / superfluid solver for a 2D lattice of
optomagnonic cavities, each hosting a photon mode, a magnon mode and a
two-level atom."""

__version__ = "0.1.0"

from .model import (
    Basis,
    FockState,
    ModelParams,
    build_full_basis,
    build_sector_basis,
    validate_params,
)
from .hamiltonian import (
    assemble_mf_hamiltonian,
    hop_block,
    number_diagonals,
    onsite_block,
)
from .eigensolver import EigenPair, eigen_full, eigen_ground, ground_value
from .analytics import (
    HopMatrixElements,
    Phi1Coefficients,
    Phi2Coefficients,
    critical_hopping,
    detuned_n1_spectrum,
    lobe_boundary_mu,
    order_parameter_analytic,
    perturbation_elements,
    phi1,
    phi2,
    polariton_splitting,
    resonant_spectrum,
    second_order_energy,
)
from .meanfield import (
    MeanFieldPoint,
    PSI_TOL,
    classify_phase,
    cutoff_convergence,
    effective_repulsion,
    ground_energy,
    minimize_order_parameter,
    observables,
)
from .sweep import (
    Axis,
    SweepResult,
    sweep_lobes,
    sweep_observables,
    sweep_phase_diagram,
    sweep_repulsion,
    write_csv,
)
from .errors import DegenerateGapError, LobeBranchError, TruncationLimitError

__all__ = [
    "Axis",
    "Basis",
    "DegenerateGapError",
    "EigenPair",
    "FockState",
    "HopMatrixElements",
    "LobeBranchError",
    "MeanFieldPoint",
    "ModelParams",
    "PSI_TOL",
    "Phi1Coefficients",
    "Phi2Coefficients",
    "SweepResult",
    "TruncationLimitError",
    "assemble_mf_hamiltonian",
    "build_full_basis",
    "build_sector_basis",
    "classify_phase",
    "critical_hopping",
    "cutoff_convergence",
    "detuned_n1_spectrum",
    "effective_repulsion",
    "eigen_full",
    "eigen_ground",
    "ground_energy",
    "ground_value",
    "hop_block",
    "lobe_boundary_mu",
    "minimize_order_parameter",
    "number_diagonals",
    "observables",
    "onsite_block",
    "order_parameter_analytic",
    "perturbation_elements",
    "phi1",
    "phi2",
    "polariton_splitting",
    "resonant_spectrum",
    "second_order_energy",
    "sweep_lobes",
    "sweep_observables",
    "sweep_phase_diagram",
    "sweep_repulsion",
    "validate_params",
    "write_csv",
]
