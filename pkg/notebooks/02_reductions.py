# %% [markdown]
# # Classical special cases
#
# Each classical function below is summed by its own oracle in
# `multiwright.reference` and compared with the general series.

# %%
import math

from multiwright import MultiIndexParams, ThreeParams, eval_multi_index, eval_three_param
from multiwright import reference as ref
from multiwright.verify import table_rows

# %%
# Wright: W_{1,lam,mu}(x^lam) = phi(lam, mu; x^lam / lam)
lam, mu, x = 0.7, 1.3, 1.5
print(eval_three_param(ThreeParams(1, lam, mu), x**lam).value, ref.wright(lam, mu, x**lam / lam))

# %%
# Mittag-Leffler: W_{0,a,b-1}(z) = E_{a,b}(z)
print(eval_three_param(ThreeParams(0, 0.6, 0.9), -1.2).value, ref.mittag_leffler(0.6, 1.9, -1.2))

# %%
# hyper-Bessel: with all alphas equal to one the series is a hyper-Bessel
# function at -z, scaled by prod Gamma(1 + a_j); its indices are a_2..a_{n+1}
params = MultiIndexParams((1, 1, 1), (1.4, 0.8))
pre = math.gamma(1 + params.a[0]) * math.gamma(1 + params.a[1])
hb = ref.hyper_bessel(ref.HyperBesselIndices(params.a[1:]), -0.9)
print(eval_multi_index(params, 0.9).value, pre * hb)

# %%
# Bessel-Clifford of third order sits at the negative argument
mu, nu, x = 0.5, 1.2, 2.0
w = eval_multi_index(MultiIndexParams((1, 1, 1), (nu + 1, mu - nu + 1)), -x).value / math.gamma(nu + 1)
print(w, ref.bessel_clifford_third(mu, nu, x))

# %% [markdown]
# ## Closed forms at x = 0.5
# Rows marked False are closed forms that do not match the series; the
# corrected form of that row is listed right after it.

# %%
for name, lhs, rhs, ok in table_rows():
    print(f"{ok!s:5}  {abs(lhs(0.5) - rhs(0.5)):9.2e}  {name}")
