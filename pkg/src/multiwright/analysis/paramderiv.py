"""Derivatives of W_{alpha,beta,nu}(z) with respect to its parameters.

With P_k = prod_{i<=k} Gamma(beta i + 1 - alpha)/Gamma(beta i + 1) and
D_k = beta k + 1 - alpha + nu, the k-th coefficient c_k = P_k / Gamma(D_k)
is differentiated in closed form:

    d/dnu    : -c_k psi(D_k)
    d/dbeta  :  c_k [sum_{j<=k} j (psi(beta j + 1 - alpha) - psi(beta j + 1)) - k psi(D_k)]
    d/dalpha :  c_k [-sum_{j<=k} psi(beta j + 1 - alpha) + psi(D_k)]

The inner sums over j are carried along in k.
"""
from __future__ import annotations

import math
from dataclasses import replace

from ..gamma import GammaPoleError, digamma, log_gamma_signed, is_pole
from ..report import ResidualReport, residual_report
from ..series import (
    DEFAULT_TOLERANCE,
    SeriesValue,
    ThreeParams,
    coefficients,
    eval_three_param,
)

__all__ = [
    "PARAMETERS",
    "ParamDerivativePoleError",
    "param_derivative_coefficients",
    "param_derivative",
    "param_derivative_fd_check",
    "wright_printed_coefficients",
    "wright_reduction_coefficients",
    "mittag_leffler_printed_coefficients",
]

PARAMETERS = ("alpha", "beta", "nu")


class ParamDerivativePoleError(ValueError):
    def __init__(self, k: int, j: int, arg: float):
        super().__init__(f"digamma pole at k={k}, j={j} (argument {arg!r})")
        self.k = k
        self.j = j


def _psi(x: float, k: int, j: int) -> float:
    try:
        return digamma(x)
    except GammaPoleError:
        raise ParamDerivativePoleError(k, j, x) from None


def param_derivative_coefficients(p: ThreeParams, which: str, count: int) -> list[float]:
    """Coefficients of z^k, k < count, in the selected parameter derivative."""
    if which not in PARAMETERS:
        raise ValueError(f"which must be one of {PARAMETERS}, got {which!r}")
    al, be, nu = p.alpha, p.beta, p.nu
    c = coefficients(p.to_multi(), count)
    out = []
    s_beta = s_alpha = 0.0
    for k in range(count):
        if k:
            pa = _psi(be * k + 1 - al, k, k)
            s_alpha += pa
            if which == "beta":
                s_beta += k * (pa - _psi(be * k + 1, k, k))
        # j = 0 labels the denominator gamma Gamma(D_k)
        psi_d = _psi(be * k + 1 - al + nu, k, 0)
        if which == "nu":
            bracket = -psi_d
        elif which == "beta":
            bracket = s_beta - k * psi_d
        else:
            bracket = -s_alpha + psi_d
        out.append(c[k] * bracket)
    return out


def param_derivative(
    p: ThreeParams,
    which: str,
    z: float,
    tolerance: float = DEFAULT_TOLERANCE,
    max_terms: int = 300,
) -> SeriesValue:
    """Sum the selected derivative series at z (same stopping rule as W itself)."""
    d = param_derivative_coefficients(p, which, max_terms)
    total, small, last = 0.0, 0, 0.0
    for k, dk in enumerate(d):
        t = dk * z**k if k else dk
        total += t
        last = abs(t)
        if last <= tolerance * max(1.0, abs(total)):
            small += 1
            if small == 3:
                return SeriesValue(total, k + 1, last, True)
        else:
            small = 0
    return SeriesValue(total, max_terms, last, False)


def _shifted(p: ThreeParams, which: str, h: float) -> ThreeParams:
    q = replace(p, **{which: getattr(p, which) + h})
    if q.alpha < 0 or q.beta <= 0:
        raise ValueError(f"perturbing {which} by {h} leaves the parameter domain")
    return q


def param_derivative_fd_check(
    p: ThreeParams,
    which: str,
    z: float,
    h: float = 1e-5,
    tolerance: float = 1e-6,
) -> ResidualReport:
    """Central difference of W against the closed-form derivative series."""
    if not 1e-6 <= h <= 1e-4:
        raise ValueError(f"h must lie in [1e-6, 1e-4], got {h}")
    plus = eval_three_param(_shifted(p, which, h), z)
    minus = eval_three_param(_shifted(p, which, -h), z)
    fd = (plus.value - minus.value) / (2 * h)
    series = param_derivative(p, which, z)
    return residual_report(
        f"param-derivative[{which}][{p.alpha},{p.beta},{p.nu}]",
        [z],
        [series.value - fd],
        [fd],
        tolerance,
    )


def _psi_over_gamma(x: float) -> tuple[float, float]:
    """(psi(x), 1/Gamma(x)) for x off the poles."""
    if is_pole(x):
        raise GammaPoleError(x)
    lg, sg = log_gamma_signed(x)
    return digamma(x), sg * math.exp(-lg)


def wright_printed_coefficients(beta: float, nu: float, which: str, count: int) -> list[float]:
    """Classical Wright parameter derivatives as printed, coefficient of z^k:
    -psi(beta k + nu)/(k! Gamma(beta k + nu)), times k for the beta derivative."""
    out = []
    for k in range(count):
        psi, rg = _psi_over_gamma(beta * k + nu)
        v = -psi * rg / math.factorial(k)
        out.append(k * v if which == "beta" else v)
    return out


def wright_reduction_coefficients(beta: float, nu: float, which: str, count: int) -> list[float]:
    """Coefficients of d/d(which) [W_{1,beta,nu}(beta z)] from the general series.

    Since W_{1,beta,nu}(beta z) = W_{beta,nu}(z), these are the coefficients
    the classical Wright derivatives must have.  For beta the argument beta z
    itself depends on beta, contributing k beta^(k-1) c_k.
    """
    if which not in ("beta", "nu"):
        raise ValueError("only the beta and nu derivatives reduce to Wright formulas")
    p = ThreeParams(1.0, beta, nu)
    d = param_derivative_coefficients(p, which, count)
    if which == "nu":
        return [dk * beta**k for k, dk in enumerate(d)]
    c = coefficients(p.to_multi(), count)
    return [dk * beta**k + k * beta ** (k - 1) * ck for k, (dk, ck) in enumerate(zip(d, c))]


def mittag_leffler_printed_coefficients(
    alpha: float, beta: float, which: str, count: int
) -> list[float]:
    """d E_{alpha,beta}/d alpha and d/d beta as printed, coefficient of z^k:
    -k psi(alpha k + beta)/Gamma(alpha k + beta) and -psi(alpha k + beta)/Gamma(alpha k + beta)."""
    out = []
    for k in range(count):
        psi, rg = _psi_over_gamma(alpha * k + beta)
        out.append(-k * psi * rg if which == "alpha" else -psi * rg)
    return out
