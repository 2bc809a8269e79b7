# %% [markdown]
# # There is no discrete set of allowed frequencies
#
# A recurring misreading of conditionally-solvable models goes like this:
# the polynomial solutions of the dimensional problem exist only when the
# oscillator frequency takes special values omega_n (obtained by solving the
# truncation condition for omega), therefore the system only admits those
# frequencies, as if frequency itself were quantized.  The machinery in this
# package refutes that directly: at every frequency in between, the
# Hamiltonian still has a complete discrete energy spectrum, computed here
# variationally, and the eigenvalues move smoothly as the frequency changes.
# The special frequencies are merely where one eigenfunction happens to take
# polynomial form.

# %%
import numpy as np

from coulharm import (PhysicalParams, check_continuity, converged_spectrum,
                      dimensionless_from_physical, folklore_energy,
                      folklore_frequency, truncation_roots)

# %% [markdown]
# ## The special frequency of the order-1 root
#
# Fix m = hbar = V_m1 = 1 (attractive Coulomb term, unit strength).  The
# positive order-1 truncation root pins the dimensionless ratio a = 2/sqrt(omega)
# to sqrt(2), which singles out omega = 2.

# %%
p = PhysicalParams(m=1.0, hbar=1.0, omega=1.0, V_m1=1.0)
root = truncation_roots(1, 0.0, "a", 0.0)[0].root
w_star = folklore_frequency(root, p)
print(f"truncation root a = {root:.12f} -> special frequency omega = {w_star:.12f}")
print(f"polynomial-solution energy there: "
      f"{folklore_energy(1, 0.0, 0.0, w_star, 1.0):.12f}")

# %% [markdown]
# ## The spectrum exists at every other frequency too
#
# Scan omega across +-20% of the special value.  At each frequency the
# dimensionless Coulomb coefficient is a(omega) = 2/sqrt(omega); the solver
# returns a full converged spectrum at every point, including all the
# frequencies where no polynomial solution exists.

# %%
omegas = np.linspace(0.8 * w_star, 1.2 * w_star, 9)
print("omega     a(omega)   E_0          E_1          E_2")
for w in omegas:
    d, _ = dimensionless_from_physical(
        PhysicalParams(m=1.0, hbar=1.0, omega=w, V_m1=1.0))
    spec = converged_spectrum(d, 3, tol=1e-10)
    E = 0.5 * 1.0 * w * spec.eigenvalues   # E = (hbar omega / 2) W at k=0
    star = "  <- omega_1" if abs(w - w_star) < 1e-9 else ""
    print(f"{w:.4f}  {d.a:.6f}  {E[0]:.9f}  {E[1]:.9f}  {E[2]:.9f}{star}")

# %% [markdown]
# ## And it moves continuously
#
# check_continuity bounds every secant slope of the eigenvalue curves by the
# derivative expectation <1/rho> at the interval endpoints.  No interval in
# the window gets flagged: the curves pass through the special frequency
# without any jump, gap, or switching.

# %%
a_grid = np.sort(np.array([dimensionless_from_physical(
    PhysicalParams(m=1.0, hbar=1.0, omega=w, V_m1=1.0))[0].a
    for w in np.linspace(0.8 * w_star, 1.2 * w_star, 41)]))
report = check_continuity(0.0, "a", a_grid, nu_max=4)
print(f"grid of {a_grid.size} points over a in [{a_grid[0]:.4f}, {a_grid[-1]:.4f}]")
print(f"all spectra converged: {report.all_converged}")
print(f"largest slope / bound ratio: {report.max_ratio:.4f} (flag threshold 2)")
print(f"flagged intervals: {report.flagged}")
print()
verdict = "continuous spectrum curves, no allowed-frequency set" \
    if report.passed else "unexpected jump detected"
print("conclusion:", verdict)
