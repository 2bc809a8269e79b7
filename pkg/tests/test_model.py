"""Parameter scaling, energy mapping, and folklore-frequency helpers."""

import math

import numpy as np
import pytest

from coulharm.model import (DimensionlessParams, EnergyValue, PhysicalParams,
                            dimensionless_from_physical, energy_from_W,
                            folklore_energy, folklore_frequency)
from coulharm.ritz import converged_spectrum


def test_physical_params_validation():
    with pytest.raises(ValueError):
        PhysicalParams(m=0.0, hbar=1.0, omega=1.0)
    with pytest.raises(ValueError):
        PhysicalParams(m=1.0, hbar=-1.0, omega=1.0)
    with pytest.raises(ValueError):
        PhysicalParams(m=1.0, hbar=1.0, omega=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(m=1.0, hbar=1.0, omega=1.0, V_m2=-0.1)
    # V_m2 = 0 with l = 0 is the plain Coulomb-plus-linear oscillator; allowed
    p = PhysicalParams(m=1.0, hbar=1.0, omega=1.0, V_m2=0.0, l=0)
    assert p.V_m2 == 0.0


def test_dimensionless_params_validation():
    with pytest.raises(ValueError):
        DimensionlessParams(s=-0.5)
    d = DimensionlessParams(s=0.0, a=-1.0, b=2.0, k=0.3)
    assert (d.a, d.b, d.k) == (-1.0, 2.0, 0.3)


def test_dimensionless_from_physical_frozen_values():
    # reference values computed once with 30-digit arithmetic and frozen
    p = PhysicalParams(m=2.0, hbar=0.5, omega=3.0, V_m2=0.3, V_m1=-0.7,
                       V_1=1.1, l=1, k=0.25)
    d, L = dimensionless_from_physical(p)
    assert abs(L - 0.28867513459481288225) < 1e-15
    assert abs(d.s - 2.408318915758459096) < 1e-14
    assert abs(d.a - (-3.2331615074619042813)) < 1e-14
    assert abs(d.b - 0.42339019740572556064) < 1e-15
    assert d.k == 0.25


def test_scaled_oscillator_reproduces_physical_energies():
    # with all potential terms off, E must equal hbar*omega*(2 nu + l + 1)
    # independent of the mass, since only the length unit carries m
    for m in (0.5, 3.0):
        p = PhysicalParams(m=m, hbar=2.0, omega=1.5, l=2)
        d, _ = dimensionless_from_physical(p)
        assert d.s == 2.0 and d.a == 0.0 and d.b == 0.0
        spec = converged_spectrum(d, 3)
        for nu in range(3):
            E = energy_from_W(spec.eigenvalues[nu], p.omega, p.hbar)
            exact = p.hbar * p.omega * (2 * nu + p.l + 1)
            assert abs(E - exact) < 1e-9 * exact


def test_energy_from_W():
    assert energy_from_W(4.4, 3.0, 0.5, k=0.5) == pytest.approx(3.4875, abs=1e-15)
    with pytest.raises(ValueError):
        energy_from_W(1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        energy_from_W(1.0, 1.0, 0.0)


def test_energy_value_from_W():
    ev = EnergyValue.from_W(4.0, nu=0, s=0.0, omega=2.0, hbar=1.0)
    assert ev.E == 4.0   # hbar*omega/2 = 1 makes E and W coincide
    assert ev.W == 4.0 and ev.nu == 0 and ev.s == 0.0


def test_folklore_frequency_roundtrip():
    # the defining property: at omega = folklore_frequency(root), the scaled
    # Coulomb coefficient equals the root again (up to the sign of V_m1)
    p = PhysicalParams(m=1.0, hbar=1.0, omega=1.0, V_m1=1.0)
    root = 1.4142135623730950488
    w = folklore_frequency(root, p)
    assert abs(w - 2.0) < 1e-15
    d, _ = dimensionless_from_physical(
        PhysicalParams(m=1.0, hbar=1.0, omega=w, V_m1=1.0))
    assert abs(abs(d.a) - root) < 1e-14

    p2 = PhysicalParams(m=2.0, hbar=0.5, omega=1.0, V_m1=-0.3)
    w2 = folklore_frequency(-3.0, p2)
    d2, _ = dimensionless_from_physical(
        PhysicalParams(m=2.0, hbar=0.5, omega=w2, V_m1=-0.3))
    assert abs(abs(d2.a) - 3.0) < 1e-13


def test_folklore_frequency_errors():
    p = PhysicalParams(m=1.0, hbar=1.0, omega=1.0, V_m1=1.0)
    with pytest.raises(ValueError):
        folklore_frequency(0.0, p)
    with pytest.raises(ValueError):
        folklore_frequency(1.0, PhysicalParams(m=1.0, hbar=1.0, omega=1.0))


def test_folklore_energy():
    # n=1, s=0, k=0.5 at omega=2: (2/2) * (2*(1+0+1) + 0.25) = 4.25
    assert folklore_energy(1, 0.0, 0.5, 2.0, 1.0) == pytest.approx(4.25, abs=1e-15)
    with pytest.raises(ValueError):
        folklore_energy(-1, 0.0, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        folklore_energy(1, 0.0, 0.0, 0.0, 1.0)


def test_frozen_dataclasses():
    d = DimensionlessParams(s=1.0)
    with pytest.raises(Exception):
        d.s = 2.0
    rng = np.random.default_rng(7)
    for _ in range(5):
        s, a, b = rng.uniform(0, 3), rng.uniform(-5, 5), rng.uniform(-5, 5)
        d = DimensionlessParams(s=s, a=a, b=b)
        assert (d.s, d.a, d.b) == (s, a, b)
