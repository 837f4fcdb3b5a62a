"""Bipartite entanglement entropy of multimode Gaussian states.

Covariance matrices (qqpp ordering, hbar = 1, vacuum = I/2) are the state
representation; symplectic spectra carry the entropies; model builders supply
ground states of quadratic Hamiltonians; a truncated number-basis oracle
recomputes every entropy by direct probability sums.
"""

__version__ = "0.1.0"

from .entropy import (
    S_COUNT_TOL,
    SIGMA_TOL,
    EntropyReport,
    ThermalMode,
    entanglement_entropy,
    mean_occupation,
    mode_entropy,
    purity_check,
    thermal_parameter,
)
from .errors import (
    DimensionError,
    InvalidPartitionError,
    InvalidStateError,
    MalformedInputError,
    NumericalFailureError,
    ParameterError,
    SympentError,
    TruncationError,
    UnphysicalEigenvalueError,
)
from .fock import (
    TAIL_LIMIT,
    ThermalSpectrumTruncated,
    TwoModeSqueezedState,
    quadrature_variances_thermal,
    required_n_max,
    thermal_entropy_bruteforce,
    thermal_probabilities,
    two_mode_squeezed_entropy,
    two_mode_squeezed_state,
)
from .logbase import BITS, LN2, NATS
from .models import (
    ModelParams,
    QuadraticModel,
    TwoOscillatorParams,
    chain_model,
    ground_state_covariance,
    normal_mode_transform,
    two_oscillator_model,
)
from .states import (
    HBAR,
    ORDERING,
    VACUUM_SIGMA,
    ModePartition,
    ValidationReport,
    characteristic_function,
    covariance_from_csv_text,
    covariance_from_json_dict,
    covariance_to_csv_text,
    covariance_to_json_dict,
    read_covariance,
    read_covariance_text,
    reduce,
    vacuum,
    validate,
    wigner_function,
    wigner_values,
)
from .symplectic import (
    DEFAULT_TOL,
    WilliamsonDecomposition,
    is_symplectic,
    random_symplectic,
    symplectic_form,
    symplectic_spectrum,
    williamson,
)

__all__ = [
    "BITS",
    "DEFAULT_TOL",
    "DimensionError",
    "EntropyReport",
    "HBAR",
    "InvalidPartitionError",
    "InvalidStateError",
    "LN2",
    "MalformedInputError",
    "ModePartition",
    "ModelParams",
    "NATS",
    "NumericalFailureError",
    "ParameterError",
    "QuadraticModel",
    "S_COUNT_TOL",
    "SIGMA_TOL",
    "SympentError",
    "TAIL_LIMIT",
    "ThermalMode",
    "ThermalSpectrumTruncated",
    "TruncationError",
    "TwoModeSqueezedState",
    "TwoOscillatorParams",
    "UnphysicalEigenvalueError",
    "VACUUM_SIGMA",
    "ValidationReport",
    "WilliamsonDecomposition",
    "chain_model",
    "characteristic_function",
    "covariance_from_csv_text",
    "covariance_from_json_dict",
    "covariance_to_csv_text",
    "covariance_to_json_dict",
    "entanglement_entropy",
    "ground_state_covariance",
    "is_symplectic",
    "mean_occupation",
    "mode_entropy",
    "normal_mode_transform",
    "purity_check",
    "quadrature_variances_thermal",
    "random_symplectic",
    "read_covariance",
    "read_covariance_text",
    "reduce",
    "required_n_max",
    "symplectic_form",
    "symplectic_spectrum",
    "thermal_entropy_bruteforce",
    "thermal_parameter",
    "thermal_probabilities",
    "two_mode_squeezed_entropy",
    "two_mode_squeezed_state",
    "two_oscillator_model",
    "vacuum",
    "validate",
    "wigner_function",
    "wigner_values",
    "williamson",
]
