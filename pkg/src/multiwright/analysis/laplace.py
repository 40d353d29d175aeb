"""Laplace transform of W(lam x^rho): term-by-term series against quadrature.

Integrating the series term by term gives

    L[W(lam x^rho)](s) = (1/s) sum_k c_k Gamma(rho k + 1) (lam / s^rho)^k,

which for rho = alpha_{n+1} is the general multi-index transform.  The
quadrature oracle integrates exp(-s x) W(lam x^rho) directly on [0, X], with
X picked so that an explicit bound on the discarded tail is below 1e-12.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy import integrate, special

from ..gamma import log_gamma_signed, is_pole
from ..report import LaplaceComparison
from ..series import (
    CoefficientStream,
    MultiIndexParams,
    SeriesValue,
    ThreeParams,
    coefficient_table,
    sum_series,
)

__all__ = [
    "SeriesDivergenceError",
    "TailBoundError",
    "laplace_series_multi",
    "laplace_tail_bound",
    "laplace_quadrature",
    "laplace_printed_three_param",
    "laplace_three_param_check",
    "printed_formula_status",
    "hyper_bessel_laplace_rhs",
]

TAIL_TARGET = 1e-12
GROWTH_LIMIT = 10
_QUAD_TERMS = 4000


class SeriesDivergenceError(ArithmeticError):
    """Transformed-series terms kept growing."""


class TailBoundError(ArithmeticError):
    """No cut-off X <= X_max makes the integrand tail small enough."""


def _sum_with_divergence(terms, tolerance: float, max_terms: int, name: str) -> SeriesValue:
    total = 0.0
    small = growing = 0
    prev = None
    last = 0.0
    for k in range(max_terms):
        t = next(terms)
        total += t
        last = abs(t)
        if last <= tolerance * max(1.0, abs(total)):
            small += 1
            if small == 3:
                return SeriesValue(total, k + 1, last, True)
        else:
            small = 0
        if t != 0.0:
            if prev is not None and last > prev:
                growing += 1
                if growing >= GROWTH_LIMIT:
                    raise SeriesDivergenceError(
                        f"{name}: term magnitudes grew for {GROWTH_LIMIT} consecutive k (k={k})"
                    )
            else:
                growing = 0
            prev = last
    return SeriesValue(total, max_terms, last, False)


def laplace_series_multi(
    params: MultiIndexParams,
    lam: float,
    s: float,
    tolerance: float = 1e-14,
    rho: float | None = None,
    max_terms: int = 2000,
) -> SeriesValue:
    """Term-by-term Laplace transform of W(lam x^rho) at ``s`` (rho defaults to alpha_{n+1})."""
    if s <= 0:
        raise ValueError(f"s must be positive, got {s}")
    rho = params.rho if rho is None else float(rho)
    if rho <= 0:
        raise ValueError("rho must be positive")
    log_s = math.log(s)
    log_lam = math.log(abs(lam)) if lam else -math.inf

    def terms():
        stream = CoefficientStream(params)
        while True:
            k, la, sg = stream.advance()
            if sg == 0 or (lam == 0 and k > 0):
                yield 0.0
                continue
            lt = la + math.lgamma(rho * k + 1) - log_s
            if k:
                lt += k * (log_lam - rho * log_s)
            t = sg * math.exp(lt)
            if lam < 0 and k % 2:
                t = -t
            yield t

    return _sum_with_divergence(terms(), tolerance, max_terms, "laplace_series_multi")


def laplace_tail_bound(
    params: MultiIndexParams, lam: float, s: float, X: float, rho: float | None = None
) -> float:
    """Upper bound on |int_X^inf exp(-s x) W(lam x^rho) dx|.

    Uses |W(lam x^rho)| <= sum_k |c_k| |lam|^k x^(rho k) and the exact
    incomplete-gamma value of int_X^inf exp(-s x) x^(rho k) dx.
    """
    rho = params.rho if rho is None else float(rho)
    log_s = math.log(s)
    log_lam = math.log(abs(lam)) if lam else -math.inf
    stream = CoefficientStream(params)
    total = 0.0
    growing = 0
    prev = math.inf
    for k in range(_QUAD_TERMS):
        _, la, sg = stream.advance()
        if lam == 0 and k > 0:
            break
        if sg == 0:
            continue
        a = rho * k + 1
        # full (untruncated) Laplace term of |c_k| |lam|^k x^(rho k)
        lfull = la + math.lgamma(a) - a * log_s + (k * log_lam if k else 0.0)
        q = special.gammaincc(a, s * X)
        if q > 0:
            total += math.exp(lfull + math.log(q))
        if lfull < -80 and lfull < prev:
            break
        growing = growing + 1 if lfull > prev else 0
        if growing >= 50:
            raise SeriesDivergenceError("tail bound: majorant Laplace series diverges")
        prev = lfull
    else:
        raise SeriesDivergenceError("tail bound: majorant Laplace series did not converge")
    return total


def laplace_quadrature(
    params: MultiIndexParams,
    lam: float,
    s: float,
    rho: float | None = None,
    x_max: float = 400.0,
) -> float:
    """Adaptive quadrature of int_0^X exp(-s x) W(lam x^rho) dx, tail < 1e-12."""
    if s <= 0:
        raise ValueError(f"s must be positive, got {s}")
    rho = params.rho if rho is None else float(rho)
    X = 1.0
    while laplace_tail_bound(params, lam, s, X, rho) > TAIL_TARGET:
        X *= 1.5
        if X > x_max:
            raise TailBoundError(
                f"integrand tail bound still above {TAIL_TARGET} at X={X:.1f}"
            )
    table = coefficient_table(params, _QUAD_TERMS)

    def integrand(x):
        if x == 0.0:
            return table.values[0]
        sv = sum_series(table, lam * x**rho, 1e-16)
        if not sv.converged:
            raise ArithmeticError(f"W({lam * x**rho}) did not converge in the integrand")
        return math.exp(-s * x) * sv.value

    value, err = integrate.quad(integrand, 0.0, X, epsabs=1e-11, epsrel=1e-12, limit=500)
    if err > 1e-10:
        raise ArithmeticError(f"quadrature error estimate {err:.2e} above 1e-10")
    return value


def laplace_printed_three_param(
    p: ThreeParams,
    lam: float,
    rho: float,
    s: float,
    tolerance: float = 1e-14,
    max_terms: int = 2000,
) -> SeriesValue:
    """The three-parameter transform exactly as printed, including the factor
    beta inside the product over i."""
    al, be, nu = p.alpha, p.beta, p.nu

    def terms():
        log_prod, sign = 0.0, 1
        k = 0
        while True:
            if k:
                num, den = be * k + 1 - al, be * k + 1
                if is_pole(num):
                    raise ValueError(f"Gamma({num}) pole at i={k}")
                ln, sn = log_gamma_signed(num)
                log_prod += math.log(be) + ln - math.lgamma(den)
                sign *= sn
            d = be * k + 1 - al + nu
            if is_pole(d) or (lam == 0 and k):
                yield 0.0
            else:
                ld, sd = log_gamma_signed(d)
                lt = log_prod + math.lgamma(rho * k + 1) - ld - math.log(s)
                if k:
                    lt += k * (math.log(abs(lam)) - rho * math.log(s))
                t = sign * sd * math.exp(lt)
                yield -t if (lam < 0 and k % 2) else t
            k += 1

    return _sum_with_divergence(terms(), tolerance, max_terms, "printed three-parameter transform")


def laplace_three_param_check(
    p: ThreeParams, lam: float, rho: float, s_grid: Sequence[float]
) -> list[LaplaceComparison]:
    """Printed formula, multi-index specialisation and quadrature at each s."""
    params = p.to_multi()
    out = []
    for s in s_grid:
        if s < 2:
            raise ValueError(f"s = {s} < 2 is outside the checked range")
        series = laplace_series_multi(params, lam, s, rho=rho)
        printed = laplace_printed_three_param(p, lam, rho, s)
        if not (series.converged and printed.converged):
            raise SeriesDivergenceError(f"transformed series did not converge at s={s}")
        quad = laplace_quadrature(params, lam, s, rho=rho)
        out.append(LaplaceComparison(float(s), series.value, quad, printed.value))
    return out


def printed_formula_status(rows: Sequence[LaplaceComparison], tolerance: float = 1e-7) -> str:
    """'pass' if the printed formula matches quadrature everywhere, else 'erratum-candidate'."""
    worst = max(r.printed_abs_diff for r in rows)
    return "pass" if worst <= tolerance else "erratum-candidate"


def hyper_bessel_laplace_rhs(params: MultiIndexParams, lam: float, s: float) -> float:
    """prod_j Gamma(1 + a_j) (1/s) E^(n)_{(1..1),(a_{j+1}+1)}(lam/s) via the oracle."""
    from ..reference import multi_index_mittag_leffler

    n = params.n
    pre = np.prod([math.gamma(1 + params.a[j]) for j in range(n)])
    ml = multi_index_mittag_leffler([1.0] * n, [params.a[j + 1] + 1 for j in range(n)], lam / s)
    return float(pre * ml / s)
