"""Variational spectra of the radial equation in a Gaussian basis.

The basis functions rho^(s+j) exp(-rho^2/2) have all matrix elements in
closed form through the integrals

    moment(s, p) = int_0^inf rho^(2s+p+1) e^{-rho^2} d rho = Gamma((2s+p+2)/2) / 2,

so the generalized eigenproblem H v = W S v is assembled analytically and the
eigenvalues are rigorous upper bounds that decrease monotonically with basis
size.  The raw monomial Gram matrix is exponentially ill conditioned (its
Cholesky factorization fails around N = 16 in double precision), which is far
below the sizes some eigenvalue curves need.  The convergence driver
therefore works in an orthonormal polynomial basis of exactly the same span,
built once per (s, N) by discretized Lanczos orthogonalization, where the
overlap stays at the identity to machine precision up to N = 128.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special
from scipy.linalg import solve_triangular
from scipy.linalg.lapack import dpotrf

from ._quad import composite_measure
from .model import DimensionlessParams

_SCHEDULE = (8, 12, 16, 20, 24, 28, 32, 36, 40, 48, 56, 64, 80, 96, 112, 128)


class CholeskyBreakdown(RuntimeError):
    """Overlap matrix is not numerically positive definite.

    Attributes:
        pivot: 1-based order of the first non-positive leading minor; callers
            can retry with a basis smaller than this.
    """

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"Cholesky factorization broke down at pivot {pivot}")


def moment(s: float, p: float) -> float:
    """Integral of rho^(2s+p+1) e^{-rho^2} over (0, inf).

    Raises:
        ValueError: when 2s+p+1 <= -1, where the integral diverges at 0.
    """
    arg = s + 0.5 * p + 1.0
    if arg <= 0.0:
        raise ValueError(
            f"moment integral diverges: 2s+p+1 = {2.0 * s + p + 1.0} <= -1")
    return 0.5 * math.gamma(arg)


@dataclass(frozen=True)
class GaussianBasis:
    """Monomial Gaussian functions rho^(s+j) e^{-rho^2/2}, j = 0..N-1."""

    s: float
    N: int
    normalized: bool = True

    def __post_init__(self) -> None:
        if self.s < 0.0:
            raise ValueError(f"s must be non-negative, got {self.s}")
        if self.N < 1:
            raise ValueError(f"basis size must be at least 1, got {self.N}")

    @property
    def normalization(self) -> np.ndarray:
        """Per-function scale factors giving a unit-diagonal overlap."""
        if not self.normalized:
            return np.ones(self.N)
        j = np.arange(self.N, dtype=float)
        return 1.0 / np.sqrt(0.5 * special.gamma(self.s + j + 1.0))


@dataclass
class MatrixPair:
    """Hamiltonian and overlap matrices of one basis at one (a, b)."""

    H: np.ndarray
    S: np.ndarray
    basis: object = None


@dataclass
class RitzSpectrum:
    """Variational eigenvalues with convergence diagnostics.

    eigenvalues are ascending and each is an upper bound to the true level
    with the same index.  convergence holds the last observed change per
    level across the size schedule (NaN for a single fixed-size solve).
    """

    params: DimensionlessParams | None
    N_used: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    convergence: np.ndarray
    converged: bool = True
    basis: object = None


def overlap_matrix(basis: GaussianBasis) -> np.ndarray:
    """Gram matrix S_ij = moment(s, i+j), optionally scaled to unit diagonal."""
    p = np.add.outer(np.arange(basis.N, dtype=float), np.arange(basis.N, dtype=float))
    S = 0.5 * special.gamma(basis.s + 0.5 * p + 1.0)
    n = basis.normalization
    S = S * np.outer(n, n)
    return 0.5 * (S + S.T)


def hamiltonian_matrix(basis: GaussianBasis, a: float, b: float) -> np.ndarray:
    """Matrix of -(1/rho)(rho d/d rho)' + s^2/rho^2 + a/rho + b rho + rho^2.

    Applying the kinetic and centrifugal parts to basis function j yields
    monomial Gaussians of powers s+j-2, s+j and s+j+2; the rho^2 potential
    moment cancels the outermost kinetic term exactly, so each entry reduces
    to the powers i+j-2 (coefficient -j(2s+j)) and i+j, plus the a and b
    moments.  The i+j-2 moment diverges for s = 0 at i = j = 0, but its
    coefficient is identically zero there, so it is evaluated only where the
    coefficient is nonzero.
    """
    s, N = basis.s, basis.N
    col = np.arange(N, dtype=float)[None, :]
    p = np.add.outer(np.arange(N, dtype=float), np.arange(N, dtype=float))
    M0 = 0.5 * special.gamma(s + 0.5 * p + 1.0)
    M1m = 0.5 * special.gamma(s + 0.5 * (p - 1.0) + 1.0)
    M1p = 0.5 * special.gamma(s + 0.5 * (p + 1.0) + 1.0)
    H = (2.0 * s + 2.0 * col + 2.0) * M0 + a * M1m + b * M1p
    coef = np.broadcast_to(-col * (2.0 * s + col), (N, N))
    valid = coef != 0.0
    if np.any(valid):
        Mm2 = np.zeros((N, N))
        Mm2[valid] = 0.5 * special.gamma(s + 0.5 * (p[valid] - 2.0) + 1.0)
        H = H + coef * Mm2
    n = basis.normalization
    H = H * np.outer(n, n)
    return 0.5 * (H + H.T)


def matrix_pair(basis: GaussianBasis, a: float, b: float) -> MatrixPair:
    """Assemble the (H, S) pair for a monomial Gaussian basis."""
    return MatrixPair(H=hamiltonian_matrix(basis, a, b),
                      S=overlap_matrix(basis), basis=basis)


def generalized_eigensolve(pair: MatrixPair, count: int,
                           params: DimensionlessParams | None = None) -> RitzSpectrum:
    """Lowest eigenpairs of H v = W S v by Cholesky reduction.

    S = L L^T is factored, the symmetric transform L^-1 H L^-T is
    diagonalized densely, and eigenvectors are transformed back.  Eigenvalues
    come out ascending and are variational upper bounds.

    Raises:
        CholeskyBreakdown: S is not numerically positive definite; the
            exception carries the failing pivot so callers can shrink N.
    """
    H = np.ascontiguousarray(pair.H, dtype=float)
    S = np.ascontiguousarray(pair.S, dtype=float)
    N = H.shape[0]
    count = min(int(count), N)
    c, info = dpotrf(S, lower=1)
    if info > 0:
        raise CholeskyBreakdown(int(info))
    if info < 0:
        raise ValueError(f"illegal Cholesky argument {-info}")
    Y = solve_triangular(c, H, lower=True)
    Ht = solve_triangular(c, Y.T, lower=True)
    Ht = 0.5 * (Ht + Ht.T)
    w, y = np.linalg.eigh(Ht)
    v = solve_triangular(c.T, y[:, :count], lower=False)
    return RitzSpectrum(params=params, N_used=N, eigenvalues=w[:count],
                        eigenvectors=v, convergence=np.full(count, np.nan),
                        converged=True, basis=pair.basis)


def _lanczos_jacobi(x: np.ndarray, m: np.ndarray, K: int) -> tuple[np.ndarray, np.ndarray]:
    """Recurrence coefficients of the orthonormal polynomials of a discrete measure.

    Lanczos iteration on diag(x) started from sqrt(m), with full
    reorthogonalization applied twice per step; this is the numerically
    stable route to the Jacobi matrix of a half-line weight.
    """
    q = np.sqrt(m)
    q = q / np.linalg.norm(q)
    Q = [q]
    alphas = []
    sqbetas = []
    for k in range(K):
        v = x * Q[k]
        alpha = Q[k] @ v
        alphas.append(alpha)
        v = v - alpha * Q[k]
        if k > 0:
            v = v - sqbetas[-1] * Q[k - 1]
        for _ in range(2):
            for u in Q:
                v = v - (u @ v) * u
        if k == K - 1:
            break
        nb = np.linalg.norm(v)
        if nb <= 0.0:
            raise RuntimeError(f"Lanczos breakdown at step {k}; measure too coarse")
        sqbetas.append(nb)
        Q.append(v / nb)
    return np.asarray(alphas), np.asarray(sqbetas)


def _poly_tables(x: np.ndarray, alphas: np.ndarray, sqbetas: np.ndarray,
                 K: int, nrm0: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Values and first two derivatives of the orthonormal polynomials at x."""
    P = np.empty((K, x.size))
    D1 = np.zeros((K, x.size))
    D2 = np.zeros((K, x.size))
    P[0] = nrm0
    for k in range(K - 1):
        nb = sqbetas[k]
        P[k + 1] = (x - alphas[k]) * P[k]
        D1[k + 1] = P[k] + (x - alphas[k]) * D1[k]
        D2[k + 1] = 2.0 * D1[k] + (x - alphas[k]) * D2[k]
        if k > 0:
            sb = sqbetas[k - 1]
            P[k + 1] -= sb * P[k - 1]
            D1[k + 1] -= sb * D1[k - 1]
            D2[k + 1] -= sb * D2[k - 1]
        P[k + 1] /= nb
        D1[k + 1] /= nb
        D2[k + 1] /= nb
    return P, D1, D2


class _OrthoBasis:
    """Orthonormal polynomial basis of the monomial Gaussian span.

    The functions rho^s pi_k(rho) e^{-rho^2/2}, with pi_k orthonormal for the
    weight rho^(2s+1) e^{-rho^2}, span exactly the same space as
    GaussianBasis(s, N) but keep the overlap at the identity to machine
    precision.  All matrices are assembled once at the full size; requesting
    a smaller size takes leading principal submatrices, so eigenvalues across
    a size schedule are nested (Cauchy interlacing) and the monotone
    upper-bound property holds exactly.
    """

    def __init__(self, s: float, N: int):
        self.s = float(s)
        self.N = int(N)
        R = math.sqrt(4.0 * N + 2.0 * s + 6.0) + 8.0
        xm, mm = composite_measure(2.0 * s + 1.0, R)
        xs, ms = composite_measure(2.0 * s, R)
        alphas, sqbetas = _lanczos_jacobi(xm, mm, N)
        nrm0 = 1.0 / math.sqrt(mm.sum())
        Pm, D1m, D2m = _poly_tables(xm, alphas, sqbetas, N, nrm0)
        Ps, D1s, _ = _poly_tables(xs, alphas, sqbetas, N, nrm0)
        S = (Pm * mm) @ Pm.T
        Rinv = (Ps * ms) @ Ps.T
        Rho = (Pm * mm * xm) @ Pm.T
        # H acting on rho^s pi e^{-rho^2/2} leaves, per the main weight,
        # -pi'' + 2 rho pi' + 2(s+1) pi + b rho pi, plus (2s+1) pi'/rho and
        # a pi/rho against the reduced weight rho^(2s).
        T = (-(Pm * mm) @ D2m.T - (2.0 * s + 1.0) * (Ps * ms) @ D1s.T
             + 2.0 * (Pm * mm * xm) @ D1m.T + 2.0 * (s + 1.0) * S)
        self.S = 0.5 * (S + S.T)
        self.Rinv = 0.5 * (Rinv + Rinv.T)
        self.Rho = 0.5 * (Rho + Rho.T)
        self.T = 0.5 * (T + T.T)

    def pair(self, a: float, b: float, N: int | None = None) -> MatrixPair:
        """(H, S) at the leading N functions (full size when N is None)."""
        N = self.N if N is None else int(N)
        if not 1 <= N <= self.N:
            raise ValueError(f"requested size {N} outside 1..{self.N}")
        H = self.T[:N, :N] + a * self.Rinv[:N, :N] + b * self.Rho[:N, :N]
        return MatrixPair(H=H, S=self.S[:N, :N], basis=self)


@lru_cache(maxsize=8)
def _ortho_basis(s: float, N: int) -> _OrthoBasis:
    return _OrthoBasis(s, N)


def converged_spectrum(params: DimensionlessParams, count: int,
                       tol: float = 1e-9, n_max: int = 64) -> RitzSpectrum:
    """Grow the basis over a size schedule until the lowest levels settle.

    The basis size increases over a fixed schedule up to n_max; convergence
    is declared when every one of the lowest `count` eigenvalues changes by
    less than tol between consecutive sizes.  Each level is checked to be
    non-increasing along the way (the variational upper-bound property; a
    small absolute allowance covers eigensolver roundoff at machine-precision
    plateaus, where the exact sequence has flattened out anyway).  If the
    schedule ends without meeting tol,
    the best result is returned with converged set to False.

    Args:
        params: operator coefficients (s, a, b).
        count: number of levels required.
        tol: per-level absolute change threshold between consecutive sizes.
        n_max: largest basis size to try.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo = max(8, count + 2)
    n_max = max(int(n_max), lo)
    steps = sorted({N for N in _SCHEDULE if lo <= N < n_max} | {n_max})
    basis = _ortho_basis(float(params.s), n_max)
    prev = None
    prev_N = None
    spec = None
    delta = np.full(min(count, n_max), np.inf)
    for N in steps:
        spec = generalized_eigensolve(basis.pair(params.a, params.b, N),
                                      count, params=params)
        w = spec.eigenvalues
        if prev is not None:
            rise = w - prev
            guard = 1e-10 * np.maximum(1.0, np.abs(w))
            if np.any(rise > guard):
                k = int(np.argmax(rise - guard))
                raise RuntimeError(
                    f"level {k} increased by {rise[k]:.3e} growing the basis "
                    f"from {prev_N} to {N}; upper-bound property violated")
            delta = np.abs(rise)
            if np.all(delta < tol):
                return RitzSpectrum(params=params, N_used=N, eigenvalues=w,
                                    eigenvectors=spec.eigenvectors,
                                    convergence=delta, converged=True,
                                    basis=basis)
        prev, prev_N = w, N
    return RitzSpectrum(params=params, N_used=prev_N, eigenvalues=prev,
                        eigenvectors=spec.eigenvectors, convergence=delta,
                        converged=False, basis=basis)


def expectation_values(spec: RitzSpectrum, nu: int) -> tuple[float, float]:
    """(<1/rho>, <rho>) in the level-nu eigenvector of a spectrum.

    Both are quadratic forms v^T M v / v^T S v with M the matrix of the
    respective power of rho in the spectrum's own basis; both are strictly
    positive.
    """
    if not 0 <= nu < spec.eigenvalues.size:
        raise IndexError(f"level {nu} not among the {spec.eigenvalues.size} computed")
    v = spec.eigenvectors[:, nu]
    N = v.size
    b = spec.basis
    if isinstance(b, _OrthoBasis):
        Rinv, Rho, S = b.Rinv[:N, :N], b.Rho[:N, :N], b.S[:N, :N]
    elif isinstance(b, GaussianBasis):
        p = np.add.outer(np.arange(N, dtype=float), np.arange(N, dtype=float))
        n = b.normalization
        Rinv = 0.5 * special.gamma(b.s + 0.5 * (p - 1.0) + 1.0) * np.outer(n, n)
        Rho = 0.5 * special.gamma(b.s + 0.5 * (p + 1.0) + 1.0) * np.outer(n, n)
        S = overlap_matrix(b)
    else:
        raise TypeError("spectrum carries no usable basis handle")
    den = float(v @ S @ v)
    return float(v @ Rinv @ v) / den, float(v @ Rho @ v) / den
