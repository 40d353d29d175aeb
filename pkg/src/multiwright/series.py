"""Power series of the multi-index function W^(alpha, nu)(z) and its
three-parameter form W_{alpha,beta,nu}.

The k-th coefficient is

    c_k = prod_{i=1..k} prod_{j=1..n} Gamma(rho*i + a_j) / Gamma(rho*i + b_j)
          / Gamma(rho*k + b_{n+1}),           rho = alpha_{n+1},

with a_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_m) and
b_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_{m-1}), alpha_0 = nu_0 = 0.
Coefficients are carried as (log|c_k|, sign) so that k in the hundreds does
not overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from .gamma import is_pole, log_gamma_signed

__all__ = [
    "DEFAULT_TOLERANCE",
    "DEFAULT_MAX_TERMS",
    "NumeratorPoleError",
    "MultiIndexParams",
    "ThreeParams",
    "SeriesValue",
    "CoefficientStream",
    "CoefficientTable",
    "coefficient_stream",
    "coefficient_table",
    "coefficients",
    "eval_multi_index",
    "eval_three_param",
    "sum_series",
]

DEFAULT_TOLERANCE = 1e-14
DEFAULT_MAX_TERMS = 300
# a_j == b_j makes the gamma ratio identically 1, poles included.
_SAME_ARG = 1e-15
# math.gamma overflows just above 171.6
_GAMMA_MAX = 171.0


def _is_normal(v: float) -> bool:
    return v != 0.0 and 1e-300 < abs(v) < 1e300


class NumeratorPoleError(ValueError):
    """A numerator gamma Gamma(rho*i + a_j) hits a pole: the term is infinite."""

    def __init__(self, i: int, j: int, arg: float):
        super().__init__(
            f"numerator Gamma(alpha_(n+1)*{i} + a_{j}) = Gamma({arg!r}) is a pole"
        )
        self.i = i
        self.j = j
        self.arg = arg


@dataclass(frozen=True)
class MultiIndexParams:
    """Parameter vectors (alpha_1..alpha_{n+1}) and (nu_1..nu_n).

    ``alpha_{n+1}`` must be positive; the inner orders may be zero, which is
    how the Mittag-Leffler specialisation (alpha = 0) enters.
    """

    alphas: tuple[float, ...]
    nus: tuple[float, ...]
    a: tuple[float, ...] = field(init=False, repr=False, compare=False)
    b: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        alphas = tuple(float(v) for v in self.alphas)
        nus = tuple(float(v) for v in self.nus)
        if len(alphas) != len(nus) + 1:
            raise ValueError(
                f"need len(alphas) == len(nus) + 1, got {len(alphas)} and {len(nus)}"
            )
        if any(not math.isfinite(v) for v in alphas + nus):
            raise ValueError("parameters must be finite")
        if any(v < 0 for v in alphas):
            raise ValueError(f"alphas must be non-negative, got {alphas}")
        if alphas[-1] <= 0:
            raise ValueError(f"alpha_(n+1) must be positive, got {alphas[-1]}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "nus", nus)

        al = (0.0,) + alphas
        nu = (0.0,) + nus
        a, b = [], []
        sa = sb = 0.0
        for j in range(1, len(alphas) + 1):
            sa += nu[j - 1] - al[j]
            sb += nu[j - 1] - al[j - 1]
            a.append(1.0 + sa)
            b.append(1.0 + sb)
        object.__setattr__(self, "a", tuple(a))
        object.__setattr__(self, "b", tuple(b))

    @property
    def n(self) -> int:
        return len(self.nus)

    @property
    def rho(self) -> float:
        """alpha_{n+1}: the power of x in the eigenfunction argument."""
        return self.alphas[-1]

    def as_dict(self) -> dict:
        return {"alphas": list(self.alphas), "nus": list(self.nus)}


@dataclass(frozen=True)
class ThreeParams:
    """(alpha, beta, nu) of W_{alpha,beta,nu}; maps to n = 1."""

    alpha: float
    beta: float
    nu: float

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    def to_multi(self) -> MultiIndexParams:
        return MultiIndexParams((self.alpha, self.beta), (self.nu,))

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "nu": self.nu}


@dataclass(frozen=True)
class SeriesValue:
    value: float
    terms_used: int
    last_term_abs: float
    converged: bool


class CoefficientStream:
    """Single-consumer iterator over c_0, c_1, ... built by ratio recurrence.

    Iterating yields floats; ``k``, ``log_abs`` and ``sign`` describe the most
    recently emitted coefficient (``sign == 0`` means the coefficient is
    exactly zero).
    """

    def __init__(self, params: MultiIndexParams):
        self.params = params
        self.k = -1
        self.log_abs = -math.inf
        self.sign = 0
        self.value = 0.0
        # running inner product prod_i prod_j Gamma(..a_j)/Gamma(..b_j),
        # in log form and, while it stays a normal float, directly
        self._prod_log = 0.0
        self._prod_sign = 1
        self._prod_val = 1.0

    def __iter__(self) -> Iterator[float]:
        return self

    def __next__(self) -> float:
        self.advance()
        return self.value

    def advance(self) -> tuple[int, float, int]:
        """Step to the next coefficient and return ``(k, log_abs, sign)``."""
        p = self.params
        k = self.k + 1
        rho = p.rho
        if k > 0 and self._prod_sign != 0:
            for j in range(p.n):
                aj, bj = p.a[j], p.b[j]
                if abs(aj - bj) <= _SAME_ARG:
                    continue
                num = rho * k + aj
                den = rho * k + bj
                if is_pole(den):
                    # 1/Gamma vanishes: this and every later coefficient is 0
                    self._prod_sign = 0
                    break
                if is_pole(num):
                    raise NumeratorPoleError(k, j + 1, num)
                ln, sn = log_gamma_signed(num)
                ld, sd = log_gamma_signed(den)
                self._prod_log += ln - ld
                self._prod_sign *= sn * sd
                if max(num, den) < _GAMMA_MAX:
                    self._prod_val *= math.gamma(num) / math.gamma(den)
                else:
                    self._prod_val *= sn * sd * math.exp(ln - ld)
        self.k = k
        outer = rho * k + p.b[-1]
        if self._prod_sign == 0 or is_pole(outer):
            self.log_abs, self.sign, self.value = -math.inf, 0, 0.0
            return self.k, self.log_abs, self.sign
        lo, so = log_gamma_signed(outer)
        self.log_abs = self._prod_log - lo
        self.sign = self._prod_sign * so
        # the direct product is exact-er than exp(log) whenever it is usable
        if outer < _GAMMA_MAX and _is_normal(self._prod_val):
            self.value = self._prod_val / math.gamma(outer)
        else:
            self.value = self.sign * math.exp(self.log_abs)
        return self.k, self.log_abs, self.sign


def coefficient_stream(params: MultiIndexParams) -> CoefficientStream:
    return CoefficientStream(params)


class CoefficientTable(NamedTuple):
    logs: tuple[float, ...]
    signs: tuple[int, ...]
    values: tuple[float, ...]


@lru_cache(maxsize=256)
def coefficient_table(params: MultiIndexParams, count: int) -> CoefficientTable:
    """First ``count`` coefficients as parallel log_abs, sign and float tuples."""
    stream = CoefficientStream(params)
    logs, signs, values = [], [], []
    for _ in range(count):
        _, la, sg = stream.advance()
        logs.append(la)
        signs.append(sg)
        values.append(stream.value)
    return CoefficientTable(tuple(logs), tuple(signs), tuple(values))


def coefficients(params: MultiIndexParams, count: int) -> list[float]:
    """First ``count`` coefficients as plain floats (may underflow to 0)."""
    return list(coefficient_table(params, count).values)


def sum_series(
    table: CoefficientTable,
    z: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SeriesValue:
    """Sum ``sum_k c_k z**k`` over a coefficient table.

    Stops once three consecutive terms are at most
    ``tolerance * max(1, |partial sum|)``.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    logs, signs, values = table
    if z == 0.0:
        return SeriesValue(values[0], 1, 0.0, True)
    logz = math.log(abs(z))
    neg = z < 0
    total = 0.0
    terms = []
    small = 0
    last = 0.0
    for k, (la, sg, c) in enumerate(zip(logs, signs, values)):
        if sg == 0:
            term = 0.0
        elif _is_normal(c) and abs(k * logz) < 690:
            term = c * z**k
        else:
            term = math.exp(la + k * logz)
            if sg < 0:
                term = -term
            if neg and k % 2:
                term = -term
        total += term
        terms.append(term)
        last = abs(term)
        if last <= tolerance * max(1.0, abs(total)):
            small += 1
            if small == 3:
                return SeriesValue(math.fsum(terms), k + 1, last, True)
        else:
            small = 0
    return SeriesValue(math.fsum(terms), len(logs), last, False)


def eval_multi_index(
    params: MultiIndexParams,
    z: float,
    tolerance: float = DEFAULT_TOLERANCE,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesValue:
    """Evaluate W^(alpha, nu)(z) by truncated summation."""
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    return sum_series(coefficient_table(params, max_terms), float(z), tolerance)


def eval_three_param(
    p: ThreeParams,
    z: float,
    tolerance: float = DEFAULT_TOLERANCE,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesValue:
    """Evaluate W_{alpha,beta,nu}(z); the caller supplies z = x**beta if needed."""
    return eval_multi_index(p.to_multi(), z, tolerance, max_terms)
