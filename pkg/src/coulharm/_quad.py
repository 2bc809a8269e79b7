"""Composite quadrature for weights rho^expo * exp(-rho^2) on (0, R].

The first panel uses a Gauss-Jacobi rule with the rho^expo endpoint factor
built into the weight, so integrands only need to be smooth; subsequent
panels use Gauss-Legendre with the full weight evaluated at the nodes.  All
masses are positive, which keeps downstream Lanczos orthogonalization and
norm computations stable.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi


def composite_measure(expo: float, R: float, n_first: int = 48,
                      panel: float = 0.75, n_gl: int = 32,
                      lin: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Nodes x and positive masses m with sum m_q f(x_q) ~ int_0^R f x^expo e^{-x^2 - lin x} dx.

    The rule integrates f exactly (to roundoff) when f is a polynomial of
    moderate degree times a smooth factor; the Gaussian tail beyond R must be
    negligible for the application, which callers ensure by choosing R.

    When lin < 0 the masses are uniformly rescaled by exp(-lin^2/4) so that
    they stay finite for strongly growing exponential factors; only ratios of
    integrals over the same measure should rely on a nonzero lin.

    Args:
        expo: endpoint exponent, must exceed -1 for integrability.
        R: upper limit of the quadrature interval.
        n_first: Gauss-Jacobi points on the first panel.
        panel: panel width (the first panel is [0, min(panel, R)]).
        n_gl: Gauss-Legendre points per subsequent panel.
        lin: coefficient of the linear term in the exponential weight.
    """
    if expo <= -1.0:
        raise ValueError(f"weight exponent must exceed -1, got {expo}")
    if R <= 0.0:
        raise ValueError(f"quadrature interval must be positive, got R={R}")
    shift = 0.25 * lin * lin if lin < 0.0 else 0.0
    p1 = min(panel, R)
    tj, wj = roots_jacobi(n_first, 0.0, expo)
    x0 = 0.5 * p1 * (tj + 1.0)
    xs = [x0]
    ms = [(0.5 * p1) ** (expo + 1.0) * wj * np.exp(-(x0 * x0 + lin * x0 + shift))]
    gx, gw = leggauss(n_gl)
    lo = p1
    while lo < R:
        hi = min(lo + panel, R)
        x = 0.5 * (hi - lo) * gx + 0.5 * (hi + lo)
        xs.append(x)
        ms.append(0.5 * (hi - lo) * gw * x ** expo * np.exp(-(x * x + lin * x + shift)))
        lo = hi
    return np.concatenate(xs), np.concatenate(ms)
