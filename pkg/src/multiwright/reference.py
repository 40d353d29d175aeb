"""Classical special functions by direct term summation.

These are the oracles the multi-index series is checked against, so they
deliberately share nothing with :mod:`multiwright.series` except the gamma
kernel. Each one sums its own defining series, term by term, and refuses to
answer when 2000 terms are not enough.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .gamma import log_gamma_signed, reciprocal_gamma, is_pole

__all__ = [
    "MAX_TERMS",
    "OracleConvergenceError",
    "HyperBesselIndices",
    "wright",
    "mittag_leffler",
    "multi_index_mittag_leffler",
    "hyper_bessel",
    "bessel_i",
    "struve_l",
    "bessel_clifford",
    "bessel_clifford_third",
]

MAX_TERMS = 2000
_REL = 1e-17
_ZERO_RUN = 30


class OracleConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class HyperBesselIndices:
    mu: tuple[float, ...]

    def __post_init__(self):
        mu = tuple(float(m) for m in self.mu)
        if not mu:
            raise ValueError("hyper-Bessel order d must be at least 1")
        object.__setattr__(self, "mu", mu)

    @property
    def d(self) -> int:
        return len(self.mu)


def _log_term(log_num: float, dens: Sequence[float]) -> tuple[float, int]:
    """log|x| and sign of exp(log_num) / prod Gamma(dens); sign 0 if any pole."""
    log_abs, sign = log_num, 1
    for x in dens:
        if is_pole(x):
            return -math.inf, 0
        lg, sg = log_gamma_signed(x)
        log_abs -= lg
        sign *= sg
    return log_abs, sign


def _summate(term: Callable[[int], float], name: str) -> float:
    total = 0.0
    quiet = zeros = 0
    for k in range(MAX_TERMS):
        t = term(k)
        total += t
        if total == 0.0:
            # leading terms can vanish at gamma poles or underflow outright
            zeros += 1
            if zeros == _ZERO_RUN:
                return 0.0
            continue
        if abs(t) <= _REL * abs(total):
            quiet += 1
            if quiet == 2:
                return total
        else:
            quiet = 0
    raise OracleConvergenceError(f"{name}: {MAX_TERMS} terms did not converge")


def _power_term(z: float, k: int, log_rest: float, sign: int) -> float:
    # z**k * sign * exp(log_rest), kept in logs until the end
    if sign == 0:
        return 0.0
    if z == 0.0:
        return sign * math.exp(log_rest) if k == 0 else 0.0
    t = math.exp(k * math.log(abs(z)) + log_rest)
    if z < 0 and k % 2:
        t = -t
    return sign * t


def wright(lam: float, mu: float, z: float) -> float:
    """Classical Wright function sum_k z^k / (k! Gamma(lam*k + mu)), lam > 0."""
    if lam <= 0:
        raise ValueError(f"wright oracle needs lam > 0, got {lam}")
    if z == 0.0:
        return reciprocal_gamma(mu)

    def term(k):
        la, sg = _log_term(-math.lgamma(k + 1), [lam * k + mu])
        return _power_term(z, k, la, sg)

    return _summate(term, "wright")


def mittag_leffler(alpha: float, beta: float, z: float) -> float:
    """Two-parameter Mittag-Leffler E_{alpha,beta}(z) for |z| <= 5."""
    return multi_index_mittag_leffler([alpha], [beta], z)


def multi_index_mittag_leffler(
    alphas: Sequence[float], betas: Sequence[float], z: float
) -> float:
    """sum_k z^k / prod_j Gamma(alpha_j*k + beta_j) for |z| <= 5."""
    if len(alphas) != len(betas) or not alphas:
        raise ValueError("alphas and betas must be non-empty and equally long")
    if any(a <= 0 for a in alphas):
        raise ValueError("Mittag-Leffler orders must be positive")
    if abs(z) > 5:
        raise ValueError(f"|z| = {abs(z)} > 5 is outside the direct-summation range")
    if z == 0.0:
        return math.prod(reciprocal_gamma(b) for b in betas)

    def term(k):
        la, sg = _log_term(0.0, [a * k + b for a, b in zip(alphas, betas)])
        return _power_term(z, k, la, sg)

    return _summate(term, "mittag_leffler")


def hyper_bessel(idx: HyperBesselIndices, z: float) -> float:
    """Delerue hyper-Bessel sum_k (-1)^k z^k / (k! prod_j Gamma(k + mu_j + 1))."""
    if abs(z) > 10:
        raise ValueError(f"|z| = {abs(z)} > 10 is outside the direct-summation range")
    if z == 0.0:
        return math.prod(reciprocal_gamma(m + 1) for m in idx.mu)

    def term(k):
        la, sg = _log_term(-math.lgamma(k + 1), [k + m + 1 for m in idx.mu])
        return _power_term(-z, k, la, sg)

    return _summate(term, "hyper_bessel")


def bessel_i(order: float, x: float) -> float:
    """Modified Bessel I_order(x) = sum_m (x/2)^(2m+order) / (m! Gamma(m+order+1))."""
    if order <= -1:
        raise ValueError(f"bessel_i oracle needs order > -1, got {order}")
    if x < 0:
        raise ValueError("bessel_i oracle needs x >= 0")
    if x == 0.0:
        return 1.0 if order == 0 else (0.0 if order > 0 else math.inf)
    log_h = math.log(x) - math.log(2.0)

    def term(m):
        la, sg = _log_term(-math.lgamma(m + 1), [m + order + 1])
        return sg * math.exp((2 * m + order) * log_h + la) if sg else 0.0

    return _summate(term, "bessel_i")


def struve_l(order: float, x: float) -> float:
    """Modified Struve L_order(x)."""
    if order < 0:
        raise ValueError(f"struve_l oracle needs order >= 0, got {order}")
    if x < 0:
        raise ValueError("struve_l oracle needs x >= 0")
    if x == 0.0:
        return 0.0
    log_h = math.log(x) - math.log(2.0)

    def term(m):
        la, sg = _log_term(0.0, [m + 1.5, m + order + 1.5])
        return sg * math.exp((2 * m + order + 1) * log_h + la)

    return _summate(term, "struve_l")


def bessel_clifford(order: float, x: float) -> float:
    """Bessel-Clifford C_order(x) = sum_k x^k / (k! Gamma(k + order + 1)).

    Equal to x^(-order/2) I_order(2 sqrt(x)) for x > 0 and 1/Gamma(order+1)
    at the origin.
    """
    if order <= -1:
        raise ValueError(f"bessel_clifford needs order > -1, got {order}")
    if x < 0:
        raise ValueError("bessel_clifford needs x >= 0")
    if x == 0.0:
        return reciprocal_gamma(order + 1)

    def term(k):
        la, sg = _log_term(-math.lgamma(k + 1), [k + order + 1])
        return _power_term(x, k, la, sg)

    return _summate(term, "bessel_clifford")


def bessel_clifford_third(mu: float, nu: float, x: float) -> float:
    """Third-order Bessel-Clifford C_{mu,nu}(x) = 0F2(mu+1, nu+1; -x) / (Gamma(mu+1) Gamma(nu+1)).

    Summed in hypergeometric (Pochhammer ratio) form, not through gammas of
    the shifted arguments.
    """
    if mu <= -1 or nu <= -1:
        raise ValueError("bessel_clifford_third needs mu, nu > -1")
    pre = reciprocal_gamma(mu + 1) * reciprocal_gamma(nu + 1)
    total = term = 1.0
    quiet = 0
    for k in range(MAX_TERMS):
        # ratio of consecutive 0F2 terms at argument -x
        term *= -x / ((k + 1) * (mu + 1 + k) * (nu + 1 + k))
        total += term
        if abs(term) <= _REL * abs(total):
            quiet += 1
            if quiet == 2:
                return pre * total
        else:
            quiet = 0
        if term == 0.0:
            return pre * total
    raise OracleConvergenceError("bessel_clifford_third: no convergence")
