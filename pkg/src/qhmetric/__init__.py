"""Metric operators for quasi-Hermitian matrix Hamiltonians."""
from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    ExceptionalPointError,
    InvertibilityError,
    NoPositiveMetricError,
    PreconditionError,
    QHMetricError,
    TrivialityError,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    adjoint,
    eig_general,
    eig_hermitian,
    is_hermitian,
    is_positive_definite,
)
from .metric import (
    MetricSpace,
    check_quasi_hermiticity,
    metric_from_weights,
    positivity_region,
    solve_metric_space,
)
from .observables import constrain_metric, fix_xi_closed_form
from .spectral import BiorthogonalSystem, SpectrumReport, biorthogonal_system, classify_spectrum, spectral_reconstruct
from .symmetry import (
    ChargeReport,
    charge_factorization,
    charge_nonexistence_scan,
    check_eta_symmetry,
    check_pseudo_hermiticity,
)
from .toy import (
    PARITY,
    ToyParameters,
    toy_charge_squared,
    toy_energies,
    toy_hamiltonian,
    toy_metric,
    toy_metric_eigenvalues,
)

__version__ = "0.1.0"
