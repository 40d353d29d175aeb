"""Executable versions of the Laplace-transform, recurrence and
parameter-derivative identities."""
from .laplace import (
    SeriesDivergenceError,
    TailBoundError,
    hyper_bessel_laplace_rhs,
    laplace_printed_three_param,
    laplace_quadrature,
    laplace_series_multi,
    laplace_tail_bound,
    laplace_three_param_check,
    printed_formula_status,
)
from .paramderiv import (
    ParamDerivativePoleError,
    mittag_leffler_printed_coefficients,
    param_derivative,
    param_derivative_coefficients,
    param_derivative_fd_check,
    wright_printed_coefficients,
    wright_reduction_coefficients,
)
from .recurrence import (
    recurrence_residual_bessel_clifford,
    recurrence_residual_main,
    recurrence_residual_mittag_leffler,
    recurrence_residual_wright,
    three_param_series,
)
