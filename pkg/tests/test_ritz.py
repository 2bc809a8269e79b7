"""Variational spectrum: matrices, eigensolver, convergence, expectations."""

import math

import numpy as np
import pytest

from coulharm.model import DimensionlessParams
from coulharm.ritz import (CholeskyBreakdown, GaussianBasis, RitzSpectrum,
                           converged_spectrum, expectation_values,
                           generalized_eigensolve, hamiltonian_matrix,
                           matrix_pair, moment, overlap_matrix)

SQRT_PI = 1.7724538509055160273


def test_moment_values():
    assert moment(0.0, 0.0) == pytest.approx(0.5, abs=1e-16)
    assert moment(0.0, 1.0) == pytest.approx(SQRT_PI / 4.0, abs=1e-16)
    assert moment(0.0, 4.0) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ValueError):
        moment(0.0, -3.0)


def test_overlap_matrix_normalized():
    S = overlap_matrix(GaussianBasis(0.0, 3))
    assert np.allclose(np.diag(S), 1.0, rtol=0.0, atol=1e-15)
    # off-diagonal between the two lowest monomials: Gamma(3/2) = sqrt(pi)/2
    assert abs(S[0, 1] - SQRT_PI / 2.0) < 1e-15
    assert np.allclose(S, S.T, rtol=0.0, atol=0.0)


def test_hamiltonian_matrix_finite_at_s_zero():
    # the i+j-2 moment diverges at i=j=0 for s=0 but carries a zero factor
    H = hamiltonian_matrix(GaussianBasis(0.0, 5), 1.0, -0.5)
    assert np.all(np.isfinite(H))
    assert np.allclose(H, H.T, rtol=0.0, atol=1e-13)


def test_monomial_basis_oscillator():
    # e^{-rho^2/2} and (1-rho^2) e^{-rho^2/2} lie in the monomial span, so
    # the two lowest oscillator levels come out at machine precision
    pair = matrix_pair(GaussianBasis(0.0, 6), 0.0, 0.0)
    spec = generalized_eigensolve(pair, 2)
    assert abs(spec.eigenvalues[0] - 2.0) < 1e-13
    assert abs(spec.eigenvalues[1] - 6.0) < 1e-12


def test_monomial_basis_breaks_down_when_large():
    pair = matrix_pair(GaussianBasis(0.0, 36), 0.0, 0.0)
    with pytest.raises(CholeskyBreakdown) as exc:
        generalized_eigensolve(pair, 2)
    assert 1 <= exc.value.pivot <= 36


def test_converged_spectrum_oscillator():
    spec = converged_spectrum(DimensionlessParams(s=1.0), 3, tol=1e-10)
    assert spec.converged
    assert spec.N_used >= 8
    for nu, exact in enumerate((4.0, 8.0, 12.0)):
        assert abs(spec.eigenvalues[nu] - exact) < 1e-10
    assert np.all(np.diff(spec.eigenvalues) > 0.0)
    assert np.all(spec.convergence < 1e-10)


def test_converged_spectrum_frozen_values():
    # reference eigenvalues frozen from tight-tolerance runs of this solver
    # after they stopped moving at the 1e-13 level across basis sizes
    cases = [
        (DimensionlessParams(s=0.0, a=1.0, b=0.5),
         [4.02546552399376, 8.03887571470058]),
        (DimensionlessParams(s=1.0, a=-0.8, b=0.3), [3.64363688391353]),
        (DimensionlessParams(s=math.sqrt(5.0), a=2.0, b=-1.0),
         [5.81784593744708]),
    ]
    for params, levels in cases:
        spec = converged_spectrum(params, len(levels), tol=1e-10)
        assert spec.converged
        for nu, ref in enumerate(levels):
            assert abs(spec.eigenvalues[nu] - ref) < 1e-12


def test_converged_spectrum_validation():
    with pytest.raises(ValueError):
        converged_spectrum(DimensionlessParams(s=0.0), 0)
    with pytest.raises(ValueError):
        converged_spectrum(DimensionlessParams(s=0.0), 2, tol=0.0)


def test_unconverged_flag():
    spec = converged_spectrum(DimensionlessParams(s=0.0, a=-3.0), 2,
                              tol=1e-15, n_max=16)
    assert not spec.converged
    assert spec.N_used == 16


def test_expectation_values_oscillator_ground():
    # <1/rho> = sqrt(pi) and <rho> = sqrt(pi)/2 in e^{-rho^2/2} at s=0,
    # checked through both basis representations
    params = DimensionlessParams(s=0.0)
    spec = converged_spectrum(params, 1, tol=1e-10)
    inv, rho = expectation_values(spec, 0)
    assert abs(inv - SQRT_PI) < 1e-10
    assert abs(rho - SQRT_PI / 2.0) < 1e-10

    direct = generalized_eigensolve(matrix_pair(GaussianBasis(0.0, 8), 0.0, 0.0),
                                    1, params=params)
    inv2, rho2 = expectation_values(direct, 0)
    assert abs(inv2 - SQRT_PI) < 1e-10
    assert abs(rho2 - SQRT_PI / 2.0) < 1e-10


def test_expectation_values_positive():
    spec = converged_spectrum(DimensionlessParams(s=0.0, a=-2.0, b=1.0), 3,
                              tol=1e-9)
    for nu in range(3):
        inv, rho = expectation_values(spec, nu)
        assert inv > 0.0 and rho > 0.0


def test_expectation_values_errors():
    spec = converged_spectrum(DimensionlessParams(s=0.0), 2)
    with pytest.raises(IndexError):
        expectation_values(spec, 5)
    bare = RitzSpectrum(params=None, N_used=2,
                        eigenvalues=spec.eigenvalues,
                        eigenvectors=spec.eigenvectors,
                        convergence=spec.convergence,
                        converged=True, basis=None)
    with pytest.raises(TypeError):
        expectation_values(bare, 0)


def test_gaussian_basis_validation():
    with pytest.raises(ValueError):
        GaussianBasis(-1.0, 4)
    with pytest.raises(ValueError):
        GaussianBasis(0.0, 0)
