# %% [markdown]
# # Fractional integrals and Caputo derivatives on power series

# %%
import numpy as np

from multiwright import GeneralizedPowerSeries, caputo_derivative, rl_integral

rng = np.random.default_rng(0)
s = GeneralizedPowerSeries(0.0, 0.5, rng.uniform(-1, 1, 6))

# %%
a, b = 0.3, 0.45
lhs = rl_integral(rl_integral(s, a), b)
rhs = rl_integral(s, a + b)
print("semigroup:", np.max(np.abs(np.subtract(lhs.coeffs, rhs.coeffs))))

# %%
g = 0.6
print("D J f - f:", np.max(np.abs(np.subtract(caputo_derivative(rl_integral(s, g), g).coeffs, s.coeffs))))
back = rl_integral(caputo_derivative(s, g), g)
print("J D f starts at exponent", back.offset, "- the constant", s.coeffs[0], "is gone")
