# %% [markdown]
# # Exact polynomial solutions and their root families
#
# The radial equation
#
#     -(1/rho)(rho R')' + s^2/rho^2 R + (a/rho + b rho + rho^2) R = W R
#
# admits solutions of the form rho^s exp(-b rho/2 - rho^2/2) P(rho) with P a
# degree-n polynomial, but only when the parameters satisfy one extra
# condition: the series coefficient c_{n+1} must vanish.  Fixing one of
# (a, b) and solving c_{n+1} = 0 for the other gives n+1 real values, each
# with its own eigenvalue W = 2(n+s+1) - b^2/4.  This script walks through
# those root families.

# %%
from coulharm import truncation_roots, truncation_W

# %% [markdown]
# ## The order-1 family at s=0, b=0
#
# c_2 is a quadratic in a with roots +sqrt(2) and -sqrt(2).  Both share the
# same eigenvalue W = 4 because W does not depend on a.

# %%
for sol in truncation_roots(1, 0.0, "a", 0.0):
    print(f"i={sol.i}  a={sol.root:+.15f}  W={sol.W}  nodes={sol.nodes}")

# %% [markdown]
# ## Symmetry and the zero root
#
# With the held parameter at zero the root set is symmetric under negation,
# and for even n the middle root is exactly zero: the polynomial factor of
# that solution is even and the equation reduces to the plain oscillator.

# %%
for n in (2, 4, 6):
    roots = [sol.root for sol in truncation_roots(n, 0.0, "a", 0.0)]
    mirrored = max(abs(r + m) for r, m in zip(roots, reversed(roots)))
    print(f"n={n}: middle root {roots[n // 2]}, negation mismatch {mirrored:.2e}")

# %% [markdown]
# ## Eleven solutions, one eigenvalue
#
# At n=10 the a-swept family has eleven distinct roots spread over about
# [-35, 35], yet every one of them carries W = 22.  A root table like this is
# the origin of the mistaken reading that the model "has" the eigenvalue 22;
# the other scripts show what actually happens between the roots.

# %%
sols = truncation_roots(10, 0.0, "a", 0.0)
print(f"W = {truncation_W(10, 0.0, 0.0)} shared by all {len(sols)} roots:")
for sol in sols:
    print(f"  i={sol.i:2d}  a={sol.root:+23.15f}  nodes={sol.nodes}")

# %% [markdown]
# ## Sweeping b instead
#
# Solving for b at fixed a=0 couples the root into the eigenvalue itself
# through W = 2(n+s+1) - b^2/4, so each member of a b-family has a different
# W.  The node count still runs 0..n down the sorted roots.

# %%
for sol in truncation_roots(3, 0.0, "b", 0.0):
    print(f"i={sol.i}  b={sol.root:+.12f}  W={sol.W:.12f}  nodes={sol.nodes}")
