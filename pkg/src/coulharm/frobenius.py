"""Polynomial (truncation) solutions of the radial equation.

Substituting R = rho^s exp(-b rho/2 - rho^2/2) P(rho) with P = sum_j c_j rho^j
into the radial eigenvalue equation produces the three-term recurrence

    c_{j+2} = A_j c_{j+1} + B_j c_j,    c_{-1} = 0, c_0 = 1,

    A_j = [2a + b(2j + 2s + 3)] / [2(j+2)(j + 2(s+1))]
    B_j = [4(2j + 2s - W + 2) - b^2] / [4(j+2)(j + 2(s+1))].

The series terminates at degree n exactly when

    W = 2(n + s + 1) - b^2/4    and    c_{n+1} = 0,

where the second condition picks out isolated values of a (at fixed b) or of
b (at fixed a).  This module finds those roots, assembles the polynomial
eigenfunctions, and provides an independent quadrature residual that measures
how well any candidate (R, W) actually satisfies the equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from numpy.polynomial import polynomial as npoly

from ._quad import composite_measure
from .model import DimensionlessParams

_IMAG_TOL = 1e-8      # companion-matrix roots: |Im| <= tol * (1 + |Re|) counts as real
_RESIDUAL_TOL = 1e-10  # post-polish |c_{n+1}| relative to the largest coefficient
_SNAP_TOL = 1e-12      # roots closer to 0 than this are the symmetry-protected zero


class CoefficientOverflow(RuntimeError):
    """Forward recurrence overflowed double precision.

    Attributes:
        last_index: largest j for which c_j was still finite.
    """

    def __init__(self, last_index: int):
        self.last_index = last_index
        super().__init__(
            f"series coefficients overflow past index {last_index}")


class TruncationRootError(RuntimeError):
    """Root extraction did not produce n+1 distinct real roots.

    All roots of the truncation condition are real, so this signals a
    numerical defect rather than a property of the problem.
    """


class QuadratureError(RuntimeError):
    """Residual quadrature did not agree between two resolutions."""


@dataclass(frozen=True)
class SeriesCoefficients:
    """Forward-recurrence coefficients c_0..c_J at fixed (s, a, b, W)."""

    s: float
    a: float
    b: float
    W: float
    c: np.ndarray


@dataclass(frozen=True)
class TruncationSolution:
    """One exact polynomial solution of the radial equation.

    Attributes:
        n: truncation order (degree of the polynomial factor).
        i: root index within the family, 1-based, roots in decreasing order.
        s: inverse-square strength parameter.
        mode: swept parameter, "a" (at fixed b) or "b" (at fixed a).
        fixed_value: the value of the parameter held fixed.
        root: the swept-parameter value solving c_{n+1} = 0.
        W: eigenvalue 2(n+s+1) - b^2/4 at the applicable b.
        poly: polynomial coefficients c_0..c_n regenerated at the root.
    """

    n: int
    i: int
    s: float
    mode: str
    fixed_value: float
    root: float
    W: float
    poly: np.ndarray

    @property
    def nodes(self) -> int:
        """Number of zeros of the polynomial factor on rho > 0."""
        return positive_zeros(self.poly)


@dataclass(frozen=True)
class RadialWavefunction:
    """Callable rho^s exp(-b rho/2 - rho^2/2) P(rho) with P given by poly."""

    s: float
    b: float
    poly: np.ndarray

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        pref = rho ** self.s * np.exp(-0.5 * self.b * rho - 0.5 * rho * rho)
        return np.asarray(pref * npoly.polyval(rho, self.poly), dtype=float)


def _denominator(j: int, s: float) -> float:
    den = 2.0 * (j + 2.0) * (j + 2.0 * (s + 1.0))
    if den == 0.0:
        raise ValueError(f"degenerate recurrence denominator at j={j}, s={s}")
    return den


def recurrence_A(j: int, a: float, b: float, s: float) -> float:
    """Coefficient of c_{j+1} in the three-term recurrence."""
    return (2.0 * a + b * (2.0 * j + 2.0 * s + 3.0)) / _denominator(j, s)


def recurrence_B(j: int, W: float, b: float, s: float) -> float:
    """Coefficient of c_j in the three-term recurrence."""
    return (4.0 * (2.0 * j + 2.0 * s - W + 2.0) - b * b) / (2.0 * _denominator(j, s))


def recurrence_B_truncated(j: int, n: int, s: float) -> float:
    """recurrence_B with W = 2(n+s+1) - b^2/4 substituted; b drops out.

    Equals 2(j-n) / [(j+2)(j + 2(s+1))], which vanishes at j = n and makes
    the termination of the series explicit.
    """
    return 4.0 * (j - n) / _denominator(j, s)


def series_coefficients(params: DimensionlessParams, W: float, J: int) -> SeriesCoefficients:
    """Evaluate c_0..c_J by the forward recurrence, without rescaling.

    Raises:
        CoefficientOverflow: if the coefficients leave double-precision
            range before index J; the exception reports the last finite index.
    """
    if J < 0:
        raise ValueError(f"J must be non-negative, got {J}")
    s, a, b = params.s, params.a, params.b
    c = np.empty(J + 1)
    c[0] = 1.0
    prev, cur = 0.0, 1.0
    for j in range(-1, J - 1):
        nxt = recurrence_A(j, a, b, s) * cur + recurrence_B(j, W, b, s) * prev
        if not math.isfinite(nxt):
            raise CoefficientOverflow(j + 1)
        c[j + 2] = nxt
        prev, cur = cur, nxt
    return SeriesCoefficients(s=s, a=a, b=b, W=W, c=c)


def truncation_W(n: int, s: float, b: float) -> float:
    """Eigenvalue 2(n+s+1) - b^2/4 at which the series can terminate at degree n."""
    if n < 0:
        raise ValueError(f"truncation order must be non-negative, got {n}")
    return 2.0 * (n + s + 1.0) - 0.25 * b * b


def truncation_polynomial(n: int, s: float, mode: str, fixed: float = 0.0) -> np.ndarray:
    """Coefficients of c_{n+1} as a degree n+1 polynomial in the swept parameter.

    With W pinned to 2(n+s+1) - b^2/4 the recurrence coefficients are affine
    in the swept parameter (the W substitution removes the b^2 term in mode
    "b"), so each c_j is propagated as an exact coefficient array of degree j.

    Args:
        n: truncation order.
        mode: "a" sweeps a at fixed b; "b" sweeps b at fixed a.
        fixed: value of the parameter held fixed.

    Returns:
        Ascending coefficient array of length n+2.
    """
    if mode not in ("a", "b"):
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    if n < 0:
        raise ValueError(f"truncation order must be non-negative, got {n}")
    prev = np.zeros(1)   # c_{-1}
    cur = np.ones(1)     # c_0
    for j in range(-1, n):
        den = _denominator(j, s)
        if mode == "a":
            var_coef = 2.0 / den
            const_coef = fixed * (2.0 * j + 2.0 * s + 3.0) / den
        else:
            var_coef = (2.0 * j + 2.0 * s + 3.0) / den
            const_coef = 2.0 * fixed / den
        B = recurrence_B_truncated(j, n, s)
        nxt = np.zeros(j + 3)
        nxt[:cur.size] += const_coef * cur
        nxt[1:cur.size + 1] += var_coef * cur
        nxt[:prev.size] += B * prev
        prev, cur = cur, nxt
    return cur


def _tail_and_derivative(n: int, s: float, mode: str, fixed: float,
                         x: float) -> tuple[float, float, float]:
    """c_{n+1}, d c_{n+1}/dx and max_j |c_j| through the recurrence at swept x."""
    a = x if mode == "a" else fixed
    b = fixed if mode == "a" else x
    cp, c = 0.0, 1.0
    dp, d = 0.0, 0.0
    cmax = 1.0
    for j in range(-1, n):
        den = _denominator(j, s)
        A = (2.0 * a + b * (2.0 * j + 2.0 * s + 3.0)) / den
        dA = (2.0 if mode == "a" else (2.0 * j + 2.0 * s + 3.0)) / den
        B = recurrence_B_truncated(j, n, s)
        cn = A * c + B * cp
        dn = A * d + dA * c + B * dp
        cp, c, dp, d = c, cn, d, dn
        cmax = max(cmax, abs(c))
    return c, d, cmax


def _polish(n: int, s: float, mode: str, fixed: float, x0: float) -> tuple[float, float, float]:
    """Newton iteration on the recurrence-evaluated c_{n+1} from estimate x0."""
    x = x0
    f, df, cmax = _tail_and_derivative(n, s, mode, fixed, x)
    for _ in range(60):
        if df == 0.0 or not math.isfinite(f):
            break
        step = f / df
        if not math.isfinite(step):
            break
        x -= step
        f, df, cmax = _tail_and_derivative(n, s, mode, fixed, x)
        if abs(step) <= 1e-15 * (1.0 + abs(x)):
            break
    return x, f, cmax


def _mp_tail_and_derivative(n: int, s, mode: str, fixed, x):
    """c_{n+1} and its x-derivative through the truncated recurrence, in mpmath."""
    a = x if mode == "a" else fixed
    b = fixed if mode == "a" else x
    cp, c = mp.mpf(0), mp.mpf(1)
    dp, d = mp.mpf(0), mp.mpf(0)
    for j in range(-1, n):
        den = 2 * (j + 2) * (j + 2 * (s + 1))
        A = (2 * a + b * (2 * j + 2 * s + 3)) / den
        dA = (2 if mode == "a" else (2 * j + 2 * s + 3)) / den
        B = mp.mpf(4 * (j - n)) / den
        cn = A * c + B * cp
        dn = A * d + dA * c + B * dp
        cp, c, dp, d = c, cn, d, dn
    return c, d


def _solution_poly(n: int, s: float, mode: str, fixed: float, root: float) -> np.ndarray:
    """Regenerate c_0..c_n at a root in extended precision.

    The coefficients are exact rationals in the root value, but the residual
    functional amplifies their rounding errors through rho^j and, for b < 0,
    through the growing exponential factor, so double-precision forward
    recursion is not accurate enough for the extreme roots.  mpmath carries
    the recursion (after sharpening the root a little beyond double rounding)
    and the result is returned as a long-double array.
    """
    with mp.workdps(40):
        s_mp, fx = mp.mpf(s), mp.mpf(fixed)
        x = mp.mpf(root)
        for _ in range(3):
            f, df = _mp_tail_and_derivative(n, s_mp, mode, fx, x)
            if df == 0:
                break
            x -= f / df
        a_mp = x if mode == "a" else fx
        b_mp = fx if mode == "a" else x
        cp, c = mp.mpf(0), mp.mpf(1)
        out = np.empty(n + 1, dtype=np.longdouble)
        out[0] = 1.0
        for j in range(-1, n - 1):
            den = 2 * (j + 2) * (j + 2 * (s_mp + 1))
            A = (2 * a_mp + b_mp * (2 * j + 2 * s_mp + 3)) / den
            B = mp.mpf(4 * (j - n)) / den
            cp, c = c, A * c + B * cp
            hi = float(c)
            out[j + 2] = np.longdouble(hi) + np.longdouble(float(c - hi))
    return out


def truncation_roots(n: int, s: float, mode: str, fixed: float = 0.0) -> list[TruncationSolution]:
    """All n+1 real roots of c_{n+1} = 0, packaged with W and the polynomial.

    Companion-matrix eigenvalues of the propagated polynomial provide the
    estimates; each is polished by Newton iteration on the recurrence form,
    which stays well conditioned at orders where the monomial expansion does
    not.  The result is ordered by decreasing root.

    Raises:
        TruncationRootError: fewer than n+1 well-separated real roots
            survived filtering and polishing.
    """
    coeffs = truncation_polynomial(n, s, mode, fixed)
    estimates = npoly.polyroots(coeffs)
    polished = []
    for z in estimates:
        if abs(z.imag) > _IMAG_TOL * (1.0 + abs(z.real)):
            continue
        x, resid, cmax = _polish(n, s, mode, fixed, float(z.real))
        if abs(resid) > _RESIDUAL_TOL * cmax:
            continue
        if abs(x) < _SNAP_TOL:
            x = 0.0
        polished.append(x)
    polished.sort(reverse=True)
    if len(polished) != n + 1:
        raise TruncationRootError(
            f"expected {n + 1} real roots at n={n}, s={s}, mode={mode!r}, "
            f"fixed={fixed}; found {len(polished)}")
    for hi, lo in zip(polished, polished[1:]):
        if hi - lo <= 1e-9 * (1.0 + abs(hi)):
            raise TruncationRootError(
                f"roots not strictly separated at n={n}, s={s}, mode={mode!r}: "
                f"{hi} vs {lo}")
    sols = []
    for idx, root in enumerate(polished, start=1):
        b = fixed if mode == "a" else root
        sols.append(TruncationSolution(
            n=n, i=idx, s=s, mode=mode, fixed_value=fixed,
            root=root, W=truncation_W(n, s, b),
            poly=_solution_poly(n, s, mode, fixed, root)))
    return sols


def positive_zeros(poly: np.ndarray) -> int:
    """Count the real zeros of an ascending-coefficient polynomial on rho > 0."""
    poly = np.asarray(poly).astype(float)
    while poly.size > 1 and poly[-1] == 0.0:
        poly = poly[:-1]
    if poly.size <= 1:
        return 0
    zeros = npoly.polyroots(poly)
    count = 0
    for z in zeros:
        if abs(z.imag) <= _IMAG_TOL * (1.0 + abs(z.real)) and z.real > _SNAP_TOL:
            count += 1
    return count


def exact_wavefunction(sol: TruncationSolution) -> RadialWavefunction:
    """The radial wavefunction of a truncation solution, regenerated at the root."""
    b = sol.fixed_value if sol.mode == "a" else sol.root
    return RadialWavefunction(s=sol.s, b=b, poly=np.array(sol.poly))


def _residual_once(R: RadialWavefunction, params: DimensionlessParams, W: float,
                   rho_max: float, n_first: int, panel: float, n_gl: int) -> float:
    # The terms of D cancel to roundoff at exact solutions while the
    # polynomial coefficients can reach 1e3, so the combination is evaluated
    # in extended precision; the quadrature itself stays in double.
    sig, beta = R.s, R.b
    p0 = np.asarray(R.poly, dtype=np.longdouble)
    p1 = npoly.polyder(p0)
    p2 = npoly.polyder(p0, 2)
    c_inv2 = params.s * params.s - sig * sig
    c_inv = params.a + 0.5 * beta * (2.0 * sig + 1.0)
    c_lin = params.b - beta
    c_const = np.longdouble(2.0 * sig + 2.0 - 0.25 * beta * beta) - np.longdouble(W)

    if sig > 0.0:
        # Weight rho^(2 sig - 1): integrands (rho D)^2 and (rho P)^2 stay
        # polynomial-smooth even when D carries 1/rho pieces.
        x, mass = composite_measure(2.0 * sig - 1.0, rho_max, n_first, panel,
                                    n_gl, lin=beta)
        x = x.astype(np.longdouble)
        P = npoly.polyval(x, p0)
        P1 = npoly.polyval(x, p1)
        P2 = npoly.polyval(x, p2)
        rD = (-x * P2 - (2.0 * sig + 1.0) * P1 + (beta + 2.0 * x) * x * P1
              + c_inv * P + (c_lin * x * x + c_const * x) * P)
        if c_inv2 != 0.0:
            rD = rD + (c_inv2 / x) * P
        num = float(mass @ (rD * rD))
        den = float(mass @ ((x * P) ** 2))
    else:
        x, mass = composite_measure(2.0 * sig + 1.0, rho_max, n_first, panel,
                                    n_gl, lin=beta)
        x = x.astype(np.longdouble)
        P = npoly.polyval(x, p0)
        P1 = npoly.polyval(x, p1)
        P2 = npoly.polyval(x, p2)
        D = (-P2 - ((2.0 * sig + 1.0) / x - beta - 2.0 * x) * P1
             + (c_inv / x + c_lin * x + c_const) * P)
        if c_inv2 != 0.0:
            D = D + (c_inv2 / (x * x)) * P
        num = float(mass @ (D * D))
        den = float(mass @ (P * P))
    if den <= 0.0 or not math.isfinite(num):
        raise QuadratureError("residual quadrature produced a non-finite value")
    return math.sqrt(max(num, 0.0) / den)


def residual_norm(R: RadialWavefunction, params: DimensionlessParams, W: float,
                  rtol: float = 1e-6) -> float:
    """Norm of (H - W) R relative to the norm of R, by weighted quadrature.

    The operator is applied analytically: with R = rho^sig exp(-beta rho/2
    - rho^2/2) P the residual reduces to a polynomial-coefficient expression
    D(rho), and both |(H-W)R|^2 and |R|^2 become integrals against the weight
    rho^(2 sig + 1) exp(-beta rho - rho^2) on (0, rho_max].  Two quadrature
    resolutions must agree, otherwise the integral is judged non-convergent
    (which genuinely happens when (H - W) R is not square integrable, e.g.
    for variational vectors at s = 0 with a nonzero 1/rho term).

    Args:
        R: candidate wavefunction.
        params: operator coefficients (s, a, b).
        W: candidate eigenvalue.
        rtol: relative agreement required between the two resolutions.

    Returns:
        ||(H - W) R|| / ||R||.

    Raises:
        QuadratureError: resolutions disagree or a non-finite value appeared.
    """
    rho_max = 10.0 + 2.0 * math.sqrt(max(W, 0.0)) + abs(params.b)
    r1 = _residual_once(R, params, W, rho_max, 48, 0.75, 32)
    r2 = _residual_once(R, params, W, rho_max, 64, 0.50, 48)
    if abs(r1 - r2) > rtol * max(r1, r2) + 1e-11:
        raise QuadratureError(
            f"residual quadrature did not converge: {r1:.6e} vs {r2:.6e}")
    return r2
