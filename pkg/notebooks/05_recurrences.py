# %% [markdown]
# # Recurrence relations
#
# Every function in a relation is built as a truncated generalized power
# series and the fractional derivatives are applied termwise.

# %%
import numpy as np

from multiwright import ThreeParams
from multiwright.analysis import (
    recurrence_residual_bessel_clifford,
    recurrence_residual_main,
    recurrence_residual_mittag_leffler,
    recurrence_residual_wright,
)

grid = np.linspace(0.1, 1.0, 10)

# %%
print(recurrence_residual_main(ThreeParams(0.5, 0.5, 1.25), grid, K=50))
print(recurrence_residual_bessel_clifford(2, [0.5, 1.0, 3.0]))
for rep in recurrence_residual_wright(0.5, 1.5, grid):
    print(rep)

# %% [markdown]
# The Mittag-Leffler relation as commonly stated leaves a residual of exactly
# z^(beta-1)/Gamma(beta-alpha): an order-zero Caputo derivative removes the
# constant term.  Subtracting that term restores the identity.

# %%
printed = recurrence_residual_mittag_leffler(0.5, 1.5, grid, form="printed")
fixed = recurrence_residual_mittag_leffler(0.5, 1.5, grid, form="caputo-limit")
print(printed.max_abs_residual, printed.note)
print(fixed.max_abs_residual)
