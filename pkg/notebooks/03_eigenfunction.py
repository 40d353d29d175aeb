# %% [markdown]
# # The fractional eigenvalue equation
#
# `W(lam x^rho)` is an eigenfunction of the composite operator
# `x^{sum(alpha_s - nu_s)} D^{alpha_{n+1}} x^{nu_n} ... x^{nu_1} D^{alpha_1}`
# built from Caputo derivatives.  On a K-term truncation the operator acts
# exactly, so the residual is just the dropped tail.

# %%
import numpy as np

from multiwright import MultiIndexParams
from multiwright.fractional import apply_hyper_bessel_operator, eigen_decay, eigen_residual, eigenseries

params = MultiIndexParams((0.6, 0.5, 0.8), (0.9, 1.4))
lam = 0.75
grid = np.linspace(0.1, 1.0, 10)

# %%
f = eigenseries(params, lam, 8)
g = apply_hyper_bessel_operator(params, f).trimmed()
print("D f coefficients      :", np.round(g.coeffs, 12))
print("lam * f, one term less:", np.round([lam * c for c in f.coeffs[:-1]], 12))

# %%
for K in (5, 10, 20, 40):
    rep = eigen_residual(params, lam, K, grid)
    print(f"K={K:3d}  residual={rep.max_abs_residual:.3e}  dropped-tail={rep.tail_bound:.3e}")

# %%
K, r1, r2 = eigen_decay(params, lam, grid)
print(f"doubling K={K}: {r1:.3e} -> {r2:.3e}  (x{r1 / r2:.1e})")
