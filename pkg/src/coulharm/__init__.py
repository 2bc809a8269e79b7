"""Radial oscillator with inverse-square, Coulomb and linear terms.

Two independent solution routes for the eigenvalue problem

    -R'' - R'/rho + (s^2/rho^2 + a/rho + b*rho + rho^2) R = W R,   rho > 0:

polynomial truncation (exact solutions at isolated parameter values) and a
variational method in a Gaussian basis (the full spectrum at any parameter
value).  The validate module quantifies how the isolated truncation points
sit on the continuous variational eigenvalue curves, which is the fact the
truncation route alone tends to obscure.
"""

from .frobenius import (CoefficientOverflow, QuadratureError, RadialWavefunction,
                        SeriesCoefficients, TruncationRootError, TruncationSolution,
                        exact_wavefunction, recurrence_A, recurrence_B,
                        residual_norm, series_coefficients, truncation_W,
                        truncation_polynomial, truncation_roots)
from .model import (DimensionlessParams, EnergyValue, PhysicalParams,
                    dimensionless_from_physical, energy_from_W, folklore_energy,
                    folklore_frequency)
from .ritz import (CholeskyBreakdown, GaussianBasis, MatrixPair, RitzSpectrum,
                   converged_spectrum, expectation_values, generalized_eigensolve,
                   hamiltonian_matrix, matrix_pair, moment, overlap_matrix)
from .validate import (ContinuityReport, HellmannFeynmanCheck, IntersectionReport,
                       check_continuity, check_hellmann_feynman,
                       check_intersections, check_parabola)

__version__ = "0.1.0"

__all__ = [
    "CholeskyBreakdown",
    "CoefficientOverflow",
    "ContinuityReport",
    "DimensionlessParams",
    "EnergyValue",
    "GaussianBasis",
    "HellmannFeynmanCheck",
    "IntersectionReport",
    "MatrixPair",
    "PhysicalParams",
    "QuadratureError",
    "RadialWavefunction",
    "RitzSpectrum",
    "SeriesCoefficients",
    "TruncationRootError",
    "TruncationSolution",
    "check_continuity",
    "check_hellmann_feynman",
    "check_intersections",
    "check_parabola",
    "converged_spectrum",
    "dimensionless_from_physical",
    "energy_from_W",
    "exact_wavefunction",
    "expectation_values",
    "folklore_energy",
    "folklore_frequency",
    "generalized_eigensolve",
    "hamiltonian_matrix",
    "matrix_pair",
    "moment",
    "overlap_matrix",
    "recurrence_A",
    "recurrence_B",
    "residual_norm",
    "series_coefficients",
    "truncation_W",
    "truncation_polynomial",
    "truncation_roots",
]
