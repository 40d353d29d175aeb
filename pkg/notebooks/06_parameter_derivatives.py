# %% [markdown]
# # Derivatives with respect to the parameters
#
# The coefficients are products of gamma ratios, so their parameter
# derivatives are digamma sums.  Central differences confirm them.

# %%
from multiwright import ThreeParams
from multiwright.analysis import (
    param_derivative,
    param_derivative_fd_check,
    wright_printed_coefficients,
    wright_reduction_coefficients,
)

p = ThreeParams(0.4, 0.7, 1.3)
for which in ("alpha", "beta", "nu"):
    sv = param_derivative(p, which, 0.8)
    rep = param_derivative_fd_check(p, which, 0.8)
    print(f"d/d{which:5s} = {sv.value:+.12f}   |series - FD| = {rep.max_abs_residual:.1e}")

# %% [markdown]
# With alpha = 1 the three-parameter function at argument beta*z is the
# classical Wright function, so its parameter derivatives must match the
# classical ones coefficient by coefficient.

# %%
ours = wright_reduction_coefficients(0.6, 1.1, "beta", 6)
classic = wright_printed_coefficients(0.6, 1.1, "beta", 6)
for k, (a, b) in enumerate(zip(ours, classic)):
    print(k, f"{a:+.15e}", f"{b:+.15e}")
