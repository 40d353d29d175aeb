# %% [markdown]
# # Evaluating the multi-index series
#
# `eval_multi_index` sums the power series directly.  The coefficients are
# carried as log-magnitudes so large indices do not overflow, and the sum
# stops after three consecutive negligible terms.

# %%
import math

from multiwright import MultiIndexParams, ThreeParams, eval_multi_index, eval_three_param

# %%
# three-parameter form with alpha=0, beta=1, nu=0 is the exponential
sv = eval_three_param(ThreeParams(0, 1, 0), 1.0)
print(sv)
print("error vs e:", sv.value - math.e)

# %%
# a genuinely multi-index case: n = 2
params = MultiIndexParams(alphas=(0.4, 0.7, 0.9), nus=(1.1, 0.6))
print("a =", params.a, "b =", params.b)
for z in (-2.0, -0.5, 0.0, 0.5, 2.0):
    sv = eval_multi_index(params, z)
    print(f"z={z:5.1f}  W={sv.value:.15g}  terms={sv.terms_used}")

# %%
# a budget that is too small is reported, not hidden
print(eval_three_param(ThreeParams(0, 1, 0), 20.0, max_terms=15))
