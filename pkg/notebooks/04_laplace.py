# %% [markdown]
# # Laplace transforms
#
# Integrating the series term by term gives a new series in `lam / s^rho`.
# The quadrature oracle integrates `exp(-s x) W(lam x^rho)` directly, with a
# cut-off chosen so the discarded tail is provably below 1e-12.

# %%
from multiwright import ThreeParams
from multiwright.analysis import laplace_quadrature, laplace_series_multi, laplace_three_param_check, printed_formula_status

p = ThreeParams(0.5, 0.5, 0.5)
params = p.to_multi()

# %%
for s in (2.0, 3.0, 5.0):
    series = laplace_series_multi(params, 1.0, s, rho=0.5).value
    quad = laplace_quadrature(params, 1.0, s, rho=0.5)
    print(f"s={s}: series={series:.15f} quadrature={quad:.15f} diff={abs(series - quad):.1e}")

# %% [markdown]
# The three-parameter formula with an extra factor beta inside its product
# is compared against both; with beta != 1 it disagrees.

# %%
rows = laplace_three_param_check(p, 1.0, 0.5, [2.0, 3.0, 5.0])
for r in rows:
    print(r)
print(printed_formula_status(rows))
