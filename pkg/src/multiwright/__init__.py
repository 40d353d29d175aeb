"""Multi-index Wright-type function W^(alpha, nu)(z), its classical
reductions, and numerical checks of the identities it satisfies."""
from .gamma import GammaPoleError, digamma, gamma, log_gamma_signed, reciprocal_gamma
from .series import (
    CoefficientStream,
    MultiIndexParams,
    NumeratorPoleError,
    SeriesValue,
    ThreeParams,
    coefficient_stream,
    eval_multi_index,
    eval_three_param,
)
from .fractional import (
    GeneralizedPowerSeries,
    apply_hyper_bessel_operator,
    caputo_derivative,
    eigen_residual,
    multiply_power,
    rl_integral,
)
from .report import LaplaceComparison, ResidualReport

__version__ = "0.1.0"
