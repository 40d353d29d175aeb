"""Recurrence relations of W_{alpha,beta,nu} as residuals on a grid.

All member functions are built as K-term generalized power series and the
fractional derivatives are applied termwise, so the only error left in a
residual is the truncation (one dropped term, reported as ``tail_bound``)
plus round-off.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..fractional import (
    GeneralizedPowerSeries,
    caputo_derivative,
    eigenseries,
    multiply_power,
)
from ..gamma import reciprocal_gamma
from ..reference import bessel_clifford
from ..report import ResidualReport, residual_report
from ..series import ThreeParams

__all__ = [
    "three_param_series",
    "recurrence_residual_main",
    "recurrence_residual_bessel_clifford",
    "recurrence_residual_mittag_leffler",
    "recurrence_residual_wright",
]


def three_param_series(p: ThreeParams, K: int) -> GeneralizedPowerSeries:
    """K-term series of W_{alpha,beta,nu}(x^beta) in powers of x."""
    return eigenseries(p.to_multi(), 1.0, K)


def _grid(x_grid: Sequence[float]) -> np.ndarray:
    x = np.asarray(x_grid, dtype=float)
    if x.size == 0 or np.any(x <= 0):
        raise ValueError("grid points must be positive")
    return x


def recurrence_residual_main(
    p: ThreeParams, x_grid: Sequence[float], K: int = 50, tolerance: float = 1e-8
) -> ResidualReport:
    """x^{a+b} D^b(x^{nu-a+b} W_{a,b,nu+b}(x^b)) - 2 x^{nu+b} W_{a,b,nu}(x^b)
    + x^{a+nu} D^a W_{a,b,nu-b}(x^b) on the grid."""
    al, be, nu = p.alpha, p.beta, p.nu
    if not (0 < al <= 1 and 0 < be <= 1):
        raise ValueError("both Caputo orders alpha, beta must lie in (0, 1]")
    if nu + be - al <= 0:
        raise ValueError("need nu + beta - alpha > 0 so the first derivative acts on x^(>0)")
    x = _grid(x_grid)
    up = three_param_series(ThreeParams(al, be, nu + be), K)
    mid = three_param_series(p, K)
    down = three_param_series(ThreeParams(al, be, nu - be), K)

    first = multiply_power(caputo_derivative(multiply_power(up, nu - al + be), be), al + be)
    second = multiply_power(mid, nu + be)
    third = multiply_power(caputo_derivative(down, al), al + nu)
    res = first(x) - 2 * second(x) + third(x)
    tail = abs(mid.coeffs[-1]) * np.power(x, be * (K - 1) + nu + be)
    return residual_report(
        f"recurrence-main[{al},{be},{nu}]",
        x,
        res,
        2 * second(x),
        tolerance,
        tail_bound=float(tail.max()),
    )


def recurrence_residual_bessel_clifford(
    n: int, x_grid: Sequence[float], tolerance: float = 1e-10
) -> ResidualReport:
    """x C_{n+2}(x) + (n+1) C_{n+1}(x) - C_n(x), with the oracle C_n."""
    if n < 0 or int(n) != n:
        raise ValueError("n must be a non-negative integer")
    x = np.asarray(x_grid, dtype=float)
    res, scale = [], []
    for xi in x:
        cn = bessel_clifford(n, xi)
        r = xi * bessel_clifford(n + 2, xi) + (n + 1) * bessel_clifford(n + 1, xi) - cn
        res.append(r)
        scale.append(cn)
    return residual_report(f"bessel-clifford[n={n}]", x, res, scale, tolerance)


def recurrence_residual_mittag_leffler(
    alpha: float,
    beta: float,
    z_grid: Sequence[float],
    K: int = 50,
    tolerance: float = 1e-8,
    form: str = "printed",
) -> ResidualReport:
    """z^a D^a(z^{a+b-1} E_{a,a+b}(z^a)) - 2 z^{a+b-1} E_{a,b}(z^a) + z^{b-1} E_{a,b-a}(z^a).

    ``form="printed"`` evaluates the relation as written.  ``form="caputo-limit"``
    replaces the last function by E_{a,b-a}(z^a) - 1/Gamma(b-a), which is what
    the general recurrence gives when the inner order tends to 0 (a Caputo
    derivative of order -> 0 maps f to f - f(0)).
    """
    if form not in ("printed", "caputo-limit"):
        raise ValueError(f"unknown form {form!r}")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if alpha + beta - 1 <= 0:
        raise ValueError(
            "need alpha + beta > 1: the Caputo stage would act on z^(alpha+beta-1) with exponent <= 0"
        )
    if beta <= 0:
        raise ValueError("beta must be positive")
    z = _grid(z_grid)
    # E_{a,b}(z^a) = W_{0,a,b-1}(z^a)
    e_up = three_param_series(ThreeParams(0.0, alpha, alpha + beta - 1), K)
    e_mid = three_param_series(ThreeParams(0.0, alpha, beta - 1), K)
    e_down = three_param_series(ThreeParams(0.0, alpha, beta - alpha - 1), K)
    if form == "caputo-limit":
        e_down = e_down - GeneralizedPowerSeries(0.0, alpha, (reciprocal_gamma(beta - alpha),))

    first = multiply_power(caputo_derivative(multiply_power(e_up, alpha + beta - 1), alpha), alpha)
    second = multiply_power(e_mid, alpha + beta - 1)
    third = multiply_power(e_down, beta - 1)
    res = first(z) - 2 * second(z) + third(z)
    tail = abs(e_mid.coeffs[-1]) * np.power(z, alpha * (K - 1) + alpha + beta - 1)
    return residual_report(
        f"recurrence-mittag-leffler[{form}][{alpha},{beta}]",
        z,
        res,
        2 * second(z),
        tolerance,
        tail_bound=float(tail.max()),
        note=f"constant-term offset z^(beta-1)/Gamma(beta-alpha) = {reciprocal_gamma(beta - alpha)!r} z^{beta - 1}",
    )


def recurrence_residual_wright(
    lam: float,
    nu: float,
    z_grid: Sequence[float],
    K: int = 50,
    tolerance: float = 1e-8,
) -> tuple[ResidualReport, ResidualReport]:
    """Fractional and first-derivative Wright relations.

    D^lam(z^{lam+nu-1} W_{lam,lam+nu}(z^lam/lam)) = z^{nu-1} W_{lam,nu}(z^lam/lam)
    d/dz W_{lam,nu-lam}(z^lam/lam) = z^{lam-1} W_{lam,nu}(z^lam/lam)
    """
    if not 0 < lam <= 1:
        raise ValueError("lam must lie in (0, 1]")
    if lam + nu - 1 <= 0:
        raise ValueError("need lam + nu > 1 for the fractional relation")
    z = _grid(z_grid)
    # W_{lam,mu}(z^lam/lam) = W_{1,lam,mu}(z^lam)
    w_up = three_param_series(ThreeParams(1.0, lam, lam + nu), K)
    w = three_param_series(ThreeParams(1.0, lam, nu), K)
    w_down = three_param_series(ThreeParams(1.0, lam, nu - lam), K)

    lhs = caputo_derivative(multiply_power(w_up, lam + nu - 1), lam)
    rhs = multiply_power(w, nu - 1)
    tail = abs(w.coeffs[-1]) * np.power(z, lam * (K - 1) + nu - 1)
    frac = residual_report(
        f"wright-fractional[{lam},{nu}]",
        z,
        lhs(z) - rhs(z),
        rhs(z),
        tolerance,
        tail_bound=float(tail.max()),
    )

    dlhs = caputo_derivative(w_down, 1.0)
    drhs = multiply_power(w, lam - 1)
    tail = abs(w.coeffs[-1]) * np.power(z, lam * (K - 1) + lam - 1)
    first = residual_report(
        f"wright-derivative[{lam},{nu}]",
        z,
        dlhs(z) - drhs(z),
        drhs(z),
        tolerance,
        tail_bound=float(tail.max()),
    )
    return frac, first
