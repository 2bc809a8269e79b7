"""Parameter sets and unit conversions for the radial eigenvalue problem.

The dimensional model is a cylindrically symmetric Schrodinger problem with
potential

    V(r) = V_m2 / r^2 + V_m1 / r + V_1 r + (m omega^2 / 2) r^2,

carried together with an integer angular quantum number l and an axial
wavenumber k.  Measuring lengths in L = sqrt(hbar / (m omega)) turns the
radial equation into the dimensionless form

    -(1/rho) (rho R')' + s^2/rho^2 R + (a/rho + b rho + rho^2) R = W R,

and the physical energy is recovered from W as E = (hbar omega / 2)(W + k^2).
This module holds both parameter sets, the conversion between them, and the
closed-form frequency/energy expressions that follow from the polynomial
truncation condition (often misread as a discrete spectrum; the validate
module quantifies why they are not).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional inputs of the model.

    Attributes:
        m: particle mass, strictly positive.
        hbar: reduced action constant, strictly positive.
        omega: angular frequency of the harmonic term, strictly positive.
        V_m2: coefficient of the 1/r^2 term (energy * length^2), non-negative.
        V_m1: coefficient of the 1/r term (energy * length), any sign.
        V_1: coefficient of the linear term (energy / length), any sign.
        l: integer angular quantum number (enters only squared).
        k: axial wavenumber, supplied already in units of 1/L.
    """

    m: float
    hbar: float
    omega: float
    V_m2: float = 0.0
    V_m1: float = 0.0
    V_1: float = 0.0
    l: int = 0
    k: float = 0.0

    def __post_init__(self) -> None:
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if self.hbar <= 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.V_m2 < 0.0:
            raise ValueError(f"V_m2 must be non-negative, got {self.V_m2}")


@dataclass(frozen=True)
class DimensionlessParams:
    """Coefficients (s, a, b) of the scaled radial equation, plus k.

    s plays the role of |gamma| where gamma^2 = 2 m V_m2 / hbar^2 + l^2;
    a and b weigh the 1/rho and rho terms of the scaled potential.
    """

    s: float
    a: float = 0.0
    b: float = 0.0
    k: float = 0.0

    def __post_init__(self) -> None:
        if self.s < 0.0:
            raise ValueError(f"s must be non-negative, got {self.s}")


@dataclass(frozen=True)
class EnergyValue:
    """A dimensionless eigenvalue W paired with its physical energy E."""

    W: float
    E: float
    nu: int
    s: float

    @classmethod
    def from_W(cls, W: float, nu: int, s: float, omega: float, hbar: float,
               k: float = 0.0) -> "EnergyValue":
        return cls(W=W, E=energy_from_W(W, omega, hbar, k), nu=nu, s=s)


def dimensionless_from_physical(p: PhysicalParams) -> tuple[DimensionlessParams, float]:
    """Scale a dimensional parameter set to the (s, a, b, k) form.

    Args:
        p: validated physical parameters.

    Returns:
        A pair (params, L) where L = sqrt(hbar / (m omega)) is the length
        unit and params holds

            s = sqrt(2 m V_m2 / hbar^2 + l^2)
            a = 2 sqrt(m) V_m1 / (hbar^(3/2) sqrt(omega))
            b = 2 V_1 / (sqrt(m hbar) omega^(3/2))

        with k passed through unchanged.
    """
    L = math.sqrt(p.hbar / (p.m * p.omega))
    a = 2.0 * math.sqrt(p.m) * p.V_m1 / (p.hbar ** 1.5 * math.sqrt(p.omega))
    b = 2.0 * p.V_1 / (math.sqrt(p.m * p.hbar) * p.omega ** 1.5)
    s = math.sqrt(2.0 * p.m * p.V_m2 / p.hbar ** 2 + float(p.l) ** 2)
    return DimensionlessParams(s=s, a=a, b=b, k=p.k), L


def energy_from_W(W: float, omega: float, hbar: float, k: float = 0.0) -> float:
    """Physical energy (hbar omega / 2)(W + k^2) for a dimensionless W."""
    if omega <= 0.0 or hbar <= 0.0:
        raise ValueError("omega and hbar must be positive")
    return 0.5 * hbar * omega * (W + k * k)


def folklore_frequency(a_root: float, p: PhysicalParams) -> float:
    """Frequency at which a given truncation root matches the 1/r strength.

    A truncation root a_root fixes the ratio between the 1/r coefficient and
    the oscillator frequency.  Solving that constraint for the frequency at
    the physical V_m1 gives

        omega = 4 m V_m1^2 / (hbar^3 a_root^2).

    Such frequencies are sometimes presented as the only ones for which the
    model has bound states.  They are not: the spectrum exists and moves
    continuously for every frequency, which check_continuity demonstrates.

    Raises:
        ValueError: if a_root or V_m1 is zero (frequency undefined).
    """
    if a_root == 0.0:
        raise ValueError("frequency undefined for a zero truncation root")
    if p.V_m1 == 0.0:
        raise ValueError("frequency undefined for V_m1 = 0")
    return 4.0 * p.m * p.V_m1 ** 2 / (p.hbar ** 3 * a_root ** 2)


def folklore_energy(n: int, s: float, k: float, omega_nl: float, hbar: float) -> float:
    """Energy (hbar omega_nl / 2)(2(n+s+1) + k^2) paired with a truncation order.

    This is the energy the truncated polynomial solution of order n has at
    the frequency omega_nl.  It is one point on a continuous eigenvalue
    curve, not a member of a discrete spectrum.
    """
    if n < 0:
        raise ValueError(f"truncation order must be non-negative, got {n}")
    if omega_nl <= 0.0:
        raise ValueError(f"omega_nl must be positive, got {omega_nl}")
    return 0.5 * hbar * omega_nl * (2.0 * (n + s + 1.0) + k * k)
