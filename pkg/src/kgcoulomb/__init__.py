"""
Klein-Gordon oscillator in 2+1 dimensions with a Coulomb-type scalar
potential ``S = f / rho`` coupled through the mass term.

The Heun series of the radial equation terminates only for discrete
frequencies ``omega_{n,l}``; this package finds them, builds the matching
energies and radial wavefunctions, and cross-checks each mode against a
finite-difference eigensolver.
"""

from .errors import (
    DegenerateCaseError,
    InvalidInputError,
    KGCoulombError,
    ModeNotFoundError,
    SeriesTruncationError,
    TailTooLargeError,
)
from .oracle import GridSpec, OracleReport, discretize_radial_operator, lowest_eigenvalues, verify_mode
from .params import (
    DerivedParams,
    ModelParams,
    derive_delta,
    derive_gamma,
    derive_params,
    energy_from_theta_condition,
    omega_from_delta,
)
from .quantization import (
    ModeSolution,
    allowed_frequencies,
    ground_state_energy,
    ground_state_frequency,
    pure_oscillator_mode,
    solve_mode,
)
from .series import (
    CoefficientPolynomials,
    SeriesCoefficients,
    coefficient_polynomials,
    evaluate_H,
    generate_coefficients,
)
from .wavefunction import RadialTable, RadialWavefunction, build_radial, normalize, sample_to_table

__version__ = "0.1.0"
