"""Real-argument gamma, signed log-gamma, reciprocal gamma and digamma.

Every other module goes through these four functions, so pole handling is
decided here once: a point closer than ``POLE_TOL`` to a non-positive
integer is a pole.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from scipy import special

__all__ = [
    "POLE_TOL",
    "GammaPoleError",
    "SignedLogGamma",
    "gamma",
    "log_gamma_signed",
    "reciprocal_gamma",
    "digamma",
    "is_pole",
]

POLE_TOL = 1e-12


class GammaPoleError(ValueError):
    """Raised when gamma or digamma is requested at a non-positive integer."""

    def __init__(self, x: float, what: str = "gamma"):
        super().__init__(f"{what} has a pole at x={x!r}")
        self.x = x


class SignedLogGamma(NamedTuple):
    log_abs: float
    sign: int

    def value(self) -> float:
        return self.sign * math.exp(self.log_abs)


def is_pole(x: float) -> bool:
    """True if ``x`` sits on (within ``POLE_TOL`` of) a non-positive integer."""
    if x > 0.5:
        return False
    return abs(x - round(x)) <= POLE_TOL


def gamma(x: float) -> float:
    """Gamma function for real ``x``.

    Raises GammaPoleError at non-positive integers and OverflowError when
    the result does not fit in a double.
    """
    if is_pole(x):
        raise GammaPoleError(x)
    try:
        return math.gamma(x)
    except OverflowError:
        raise OverflowError(f"gamma({x!r}) overflows double precision") from None


def log_gamma_signed(x: float) -> SignedLogGamma:
    """Return ``(log|Gamma(x)|, sign Gamma(x))``; safe far beyond gamma's range."""
    if is_pole(x):
        raise GammaPoleError(x)
    if x > 0:
        return SignedLogGamma(math.lgamma(x), 1)
    # Gamma alternates sign between consecutive negative integers.
    sign = -1 if math.floor(x) % 2 else 1
    return SignedLogGamma(math.lgamma(x), sign)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x); exactly 0 at the poles of gamma."""
    if is_pole(x):
        return 0.0
    try:
        g = math.gamma(x)
    except OverflowError:
        g = math.inf
    if g != 0.0 and math.isfinite(g):
        return 1.0 / g
    lg = log_gamma_signed(x)
    try:
        return lg.sign * math.exp(-lg.log_abs)
    except OverflowError:
        return lg.sign * math.inf


def digamma(x: float) -> float:
    """Logarithmic derivative of gamma."""
    if is_pole(x):
        raise GammaPoleError(x, "digamma")
    return float(special.digamma(x))
