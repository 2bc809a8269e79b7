"""Executable checks of the structural claims connecting both solution routes.

The polynomial truncation route produces isolated (parameter, W) points; the
variational route produces continuous eigenvalue curves.  The checks here
quantify how the two fit together: each truncation root lies on the curve of
the level matching its root index, and on the mirror curve (negated swept
parameter) of the complementary level; b-swept families lie on an inverted
parabola; eigenvalue derivatives obey the Hellmann-Feynman identities; and
the curves are continuous with slopes bounded by those same identities.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .frobenius import truncation_roots, truncation_W
from .model import DimensionlessParams
from .ritz import converged_spectrum, expectation_values

_STABLE_REL = 1e-6  # per-level schedule change below this counts as converged


@dataclass(frozen=True)
class IntersectionReport:
    """Crossing of one truncation root with the variational curves.

    abs_deviation compares the truncation W against the variational level
    nu = i-1 at the root parameter; mirror_abs_deviation against the level
    n+1-i at the negated swept parameter.  converged is False when either
    target level was still moving across the basis-size schedule, so a
    failed comparison is never reported as a silent pass.
    """

    n: int
    i: int
    s: float
    mode: str
    root: float
    W_truncation: float
    W_variational: float
    mirror_W_variational: float
    abs_deviation: float
    mirror_abs_deviation: float
    tolerance: float
    passed: bool
    converged: bool


class HellmannFeynmanCheck(NamedTuple):
    """Finite-difference eigenvalue slopes next to the matching expectations."""

    fd_a: float
    exp_a: float
    fd_b: float
    exp_b: float
    converged: bool


@dataclass(frozen=True)
class ContinuityReport:
    """Largest eigenvalue slope on a grid against its derivative bound.

    flagged lists (level, interval) pairs whose secant slope exceeded twice
    the larger endpoint derivative bound, which would indicate a missed
    crossing or a mislabeled level.
    """

    max_jump: float
    max_ratio: float
    flagged: list
    passed: bool
    all_converged: bool


def _level_stable(spec, nu: int) -> bool:
    d = spec.convergence[nu]
    return bool(np.isfinite(d) and d < _STABLE_REL * max(1.0, abs(spec.eigenvalues[nu])))


def check_intersections(n: int, s: float, mode: str = "a", fixed: float = 0.0,
                        tolerance: float | None = None) -> list[IntersectionReport]:
    """Compare every truncation root of order n against the variational curves.

    For root i (roots ordered decreasing) the variational level nu = i-1 is
    evaluated at the root parameter and level n+1-i at the negated swept
    parameter; both must reproduce the truncation W.  The mirror comparison
    expresses the parity relation of the series coefficients and is meaningful
    when the held parameter is zero, which is how the swept families are used.

    Args:
        tolerance: pass threshold for both deviations; defaults to 1e-8 when
            sweeping a (the exact solution lies in the basis span) and 1e-6
            when sweeping b (span reached only in the convergence limit).
    """
    if tolerance is None:
        tolerance = 1e-8 if mode == "a" else 1e-6
    sols = truncation_roots(n, s, mode, fixed)
    count = n + 2
    reports = []
    for sol in sols:
        nu_direct = sol.i - 1
        nu_mirror = n + 1 - sol.i
        if mode == "a":
            p_dir = DimensionlessParams(s=s, a=sol.root, b=fixed)
            p_mir = DimensionlessParams(s=s, a=-sol.root, b=fixed)
        else:
            p_dir = DimensionlessParams(s=s, a=fixed, b=sol.root)
            p_mir = DimensionlessParams(s=s, a=fixed, b=-sol.root)
        spec_dir = converged_spectrum(p_dir, count, tol=1e-10)
        spec_mir = converged_spectrum(p_mir, count, tol=1e-10)
        w_dir = float(spec_dir.eigenvalues[nu_direct])
        w_mir = float(spec_mir.eigenvalues[nu_mirror])
        dev = abs(w_dir - sol.W)
        dev_m = abs(w_mir - sol.W)
        stable = _level_stable(spec_dir, nu_direct) and _level_stable(spec_mir, nu_mirror)
        reports.append(IntersectionReport(
            n=n, i=sol.i, s=s, mode=mode, root=sol.root, W_truncation=sol.W,
            W_variational=w_dir, mirror_W_variational=w_mir,
            abs_deviation=dev, mirror_abs_deviation=dev_m,
            tolerance=tolerance,
            passed=bool(dev <= tolerance and dev_m <= tolerance),
            converged=stable))
    return reports


def check_parabola(n: int, s: float, a_fixed: float = 0.0) -> float:
    """Largest deviation of the b-swept family from W = 2(n+s+1) - b^2/4.

    An identity up to root-polishing error, so the return value tests the
    integrity of the root/W pairing; it should not exceed about 1e-10.
    """
    sols = truncation_roots(n, s, "b", a_fixed)
    return max(abs(sol.W - truncation_W(n, s, sol.root)) for sol in sols)


def check_hellmann_feynman(params: DimensionlessParams, nu: int,
                           delta: float = 1e-3) -> HellmannFeynmanCheck:
    """Central finite differences of W_nu against <1/rho> and <rho>.

    The derivative of the eigenvalue in a equals <1/rho> and in b equals
    <rho>, so the returned pairs should agree to O(delta^2) and all four
    numbers are strictly positive.  converged is False when any of the five
    spectra involved had the target level still moving.
    """
    count = nu + 1
    center = converged_spectrum(params, count, tol=1e-10)
    exp_a, exp_b = expectation_values(center, nu)
    shifted = [converged_spectrum(replace(params, a=params.a + delta), count, tol=1e-10),
               converged_spectrum(replace(params, a=params.a - delta), count, tol=1e-10),
               converged_spectrum(replace(params, b=params.b + delta), count, tol=1e-10),
               converged_spectrum(replace(params, b=params.b - delta), count, tol=1e-10)]
    fd_a = (shifted[0].eigenvalues[nu] - shifted[1].eigenvalues[nu]) / (2.0 * delta)
    fd_b = (shifted[2].eigenvalues[nu] - shifted[3].eigenvalues[nu]) / (2.0 * delta)
    stable = _level_stable(center, nu) and all(_level_stable(sp, nu) for sp in shifted)
    return HellmannFeynmanCheck(fd_a=float(fd_a), exp_a=exp_a,
                                fd_b=float(fd_b), exp_b=exp_b, converged=stable)


def check_continuity(s: float, mode: str, grid, nu_max: int,
                     fixed: float = 0.0) -> ContinuityReport:
    """Bound eigenvalue secant slopes on a grid by the derivative expectations.

    For every level nu <= nu_max and every grid interval, the slope
    |W(x_{k+1}) - W(x_k)| / h is compared against the larger endpoint value
    of the matching expectation (<1/rho> when sweeping a, <rho> when sweeping
    b), which bounds the derivative on the interval for smoothly varying
    curves.  Intervals exceeding twice that bound are flagged.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise ValueError("grid must hold at least two values")
    if np.any(np.diff(grid) <= 0.0):
        raise ValueError("grid must be strictly increasing")
    if mode not in ("a", "b"):
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    count = nu_max + 1
    W = np.empty((grid.size, count))
    bound = np.empty((grid.size, count))
    all_conv = True
    for k, x in enumerate(grid):
        if mode == "a":
            p = DimensionlessParams(s=s, a=float(x), b=fixed)
        else:
            p = DimensionlessParams(s=s, a=fixed, b=float(x))
        spec = converged_spectrum(p, count, tol=1e-9)
        W[k] = spec.eigenvalues
        all_conv = all_conv and spec.converged
        for nu in range(count):
            e_inv, e_rho = expectation_values(spec, nu)
            bound[k, nu] = e_inv if mode == "a" else e_rho
    h = np.diff(grid)
    slopes = np.abs(np.diff(W, axis=0)) / h[:, None]
    bounds = np.maximum(bound[:-1], bound[1:])
    ratio = slopes / bounds
    flagged = [(int(nu), int(k)) for nu, k in zip(*np.nonzero(ratio.T > 2.0))]
    return ContinuityReport(max_jump=float(slopes.max()),
                            max_ratio=float(ratio.max()),
                            flagged=flagged,
                            passed=not flagged,
                            all_converged=all_conv)
