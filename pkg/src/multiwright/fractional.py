"""Termwise fractional calculus on generalized power series.

A :class:`GeneralizedPowerSeries` is the finite sum
``sum_k c_k x**(offset + step*k)``.  On such sums the Riemann-Liouville
integral and the Caputo derivative (order in (0, 1]) act exactly through the
power rules

    J^g x^d = Gamma(d+1)/Gamma(d+g+1) x^(d+g)      (d > -1)
    D^g x^d = Gamma(d+1)/Gamma(d-g+1) x^(d-g)      (d > 0; D^g 1 = 0)

so no quadrature is involved anywhere in this module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .report import ResidualReport, residual_report
from .series import MultiIndexParams, coefficient_table

__all__ = [
    "ExponentError",
    "OperatorStageError",
    "GeneralizedPowerSeries",
    "rl_integral",
    "caputo_derivative",
    "multiply_power",
    "apply_hyper_bessel_operator",
    "eigenseries",
    "eigen_residual",
    "eigen_decay",
]

_ZERO_EXP = 1e-12
_ALIGN = 1e-9


class ExponentError(ValueError):
    """An exponent left the domain where the power rules hold."""


class OperatorStageError(ExponentError):
    def __init__(self, stage: int, desc: str, cause: Exception):
        super().__init__(f"stage {stage} ({desc}): {cause}")
        self.stage = stage
        self.desc = desc


def _gamma_ratio(x: float, y: float) -> float:
    """Gamma(x)/Gamma(y) for x, y > 0."""
    if x < 170 and y < 170:
        return math.gamma(x) / math.gamma(y)
    return math.exp(math.lgamma(x) - math.lgamma(y))


@dataclass(frozen=True)
class GeneralizedPowerSeries:
    offset: float
    step: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")
        coeffs = tuple(float(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "offset", float(self.offset))
        object.__setattr__(self, "step", float(self.step))
        if coeffs and self.offset <= -1:
            raise ExponentError(f"exponent {self.offset} <= -1")

    @classmethod
    def zero(cls, step: float = 1.0) -> GeneralizedPowerSeries:
        return cls(0.0, step, ())

    @classmethod
    def monomial(cls, exponent: float, coeff: float = 1.0, step: float = 1.0):
        return cls(exponent, step, (coeff,))

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def exponents(self) -> np.ndarray:
        return self.offset + self.step * np.arange(len(self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if not self.coeffs:
            return np.zeros_like(x)[()]
        c = np.asarray(self.coeffs)
        out = (c * np.power.outer(x, self.exponents)).sum(axis=-1)
        return out[()] if out.ndim == 0 else out

    def trimmed(self) -> GeneralizedPowerSeries:
        """Drop leading zero coefficients (advancing the offset)."""
        c = self.coeffs
        i = 0
        while i < len(c) and c[i] == 0.0:
            i += 1
        if i == len(c):
            return GeneralizedPowerSeries.zero(self.step)
        if i == 0:
            return self
        return GeneralizedPowerSeries(self.offset + i * self.step, self.step, c[i:])

    def scaled(self, a: float) -> GeneralizedPowerSeries:
        return GeneralizedPowerSeries(self.offset, self.step, [a * c for c in self.coeffs])

    def __mul__(self, a: float) -> GeneralizedPowerSeries:
        return self.scaled(a)

    __rmul__ = __mul__

    def __neg__(self) -> GeneralizedPowerSeries:
        return self.scaled(-1.0)

    def __add__(self, other: GeneralizedPowerSeries) -> GeneralizedPowerSeries:
        if not isinstance(other, GeneralizedPowerSeries):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        if abs(self.step - other.step) > _ALIGN * max(1.0, self.step):
            raise ValueError(f"steps differ: {self.step} vs {other.step}")
        lo, hi = (self, other) if self.offset <= other.offset else (other, self)
        shift = (hi.offset - lo.offset) / lo.step
        m = round(shift)
        if abs(shift - m) > _ALIGN * max(1.0, shift):
            raise ValueError(
                f"offsets {lo.offset} and {hi.offset} are not on a common lattice"
            )
        size = max(len(lo.coeffs), m + len(hi.coeffs))
        out = [0.0] * size
        for k, c in enumerate(lo.coeffs):
            out[k] += c
        for k, c in enumerate(hi.coeffs):
            out[m + k] += c
        return GeneralizedPowerSeries(lo.offset, lo.step, out)

    def __sub__(self, other: GeneralizedPowerSeries) -> GeneralizedPowerSeries:
        return self + (-other)


def rl_integral(s: GeneralizedPowerSeries, gamma: float) -> GeneralizedPowerSeries:
    """Riemann-Liouville integral of order ``gamma >= 0`` (0 is the identity)."""
    if gamma < 0:
        raise ValueError(f"integral order must be non-negative, got {gamma}")
    if gamma == 0 or not s.coeffs:
        return s
    e = s.exponents
    if e[0] <= -1:
        raise ExponentError(f"exponent {e[0]} <= -1")
    coeffs = [c * _gamma_ratio(ek + 1, ek + gamma + 1) for c, ek in zip(s.coeffs, e)]
    return GeneralizedPowerSeries(s.offset + gamma, s.step, coeffs)


def caputo_derivative(s: GeneralizedPowerSeries, gamma: float) -> GeneralizedPowerSeries:
    """Caputo derivative of order ``gamma`` in (0, 1].

    A constant term is annihilated; any non-zero term with exponent in
    (-1, 0) is rejected.
    """
    if not 0 < gamma <= 1:
        raise ValueError(f"Caputo order must lie in (0, 1], got {gamma}")
    s = s.trimmed()
    if not s.coeffs:
        return GeneralizedPowerSeries.zero(s.step)
    offset, coeffs = s.offset, s.coeffs
    if abs(offset) <= _ZERO_EXP:
        offset, coeffs = offset + s.step, coeffs[1:]
        if not coeffs:
            return GeneralizedPowerSeries.zero(s.step)
    elif offset < 0:
        raise ExponentError(
            f"Caputo derivative of x^{offset} (exponent in (-1, 0)) is not defined"
        )
    e = offset + s.step * np.arange(len(coeffs))
    out = [c * _gamma_ratio(ek + 1, ek - gamma + 1) for c, ek in zip(coeffs, e)]
    return GeneralizedPowerSeries(offset - gamma, s.step, out)


def multiply_power(s: GeneralizedPowerSeries, p: float) -> GeneralizedPowerSeries:
    """Multiply by x**p."""
    if p == 0 or not s.coeffs:
        return s
    if s.offset + p <= -1:
        raise ExponentError(f"x^{p} pushes exponent {s.offset} to {s.offset + p} <= -1")
    return GeneralizedPowerSeries(s.offset + p, s.step, s.coeffs)


def apply_hyper_bessel_operator(
    params: MultiIndexParams, series: GeneralizedPowerSeries
) -> GeneralizedPowerSeries:
    """Apply x^{sum(alpha_s - nu_s)} D^{alpha_{n+1}} x^{nu_n} D^{alpha_n} ... x^{nu_1} D^{alpha_1}."""
    alphas, nus = params.alphas, params.nus
    out = series
    stage = 0

    def run(desc, fn, *args):
        nonlocal out, stage
        stage += 1
        try:
            out = fn(out, *args)
        except ValueError as exc:
            raise OperatorStageError(stage, desc, exc) from exc

    for j in range(params.n + 1):
        run(f"D^{alphas[j]}", caputo_derivative, alphas[j])
        if j < params.n:
            run(f"x^{nus[j]}", multiply_power, nus[j])
    shift = sum(a - v for a, v in zip(alphas[:-1], nus))
    run(f"x^{shift}", multiply_power, shift)
    return out


def eigenseries(params: MultiIndexParams, lam: float, K: int) -> GeneralizedPowerSeries:
    """First K terms of W(lam * x**rho) as a series in x."""
    if K < 1:
        raise ValueError("K must be at least 1")
    table = coefficient_table(params, K)
    coeffs = []
    for k, (la, sg, v) in enumerate(zip(*table)):
        if sg == 0 or (lam == 0 and k > 0):
            coeffs.append(0.0)
            continue
        lp = k * math.log(abs(lam)) if k else 0.0
        if v != 0.0 and math.isfinite(v) and abs(la + lp) < 690:
            coeffs.append(v * lam**k)
            continue
        c = sg * math.exp(la + lp)
        if lam < 0 and k % 2:
            c = -c
        coeffs.append(c)
    return GeneralizedPowerSeries(0.0, params.rho, coeffs)


def eigen_residual(
    params: MultiIndexParams,
    lam: float,
    K: int,
    grid: Sequence[float],
    tolerance: float = 1e-8,
) -> ResidualReport:
    """Residual of D f - lam f for the K-term truncation f of W(lam x^rho).

    On the truncation the residual is exactly -lam times the last kept term,
    which is reported as ``tail_bound``.
    """
    if any(a <= 0 for a in params.alphas) or any(v <= 0 for v in params.nus):
        raise ValueError("eigenfunction property needs all alpha_j > 0 and nu_j > 0")
    f = eigenseries(params, lam, K)
    g = apply_hyper_bessel_operator(params, f)
    r = g - lam * f
    x = np.asarray(grid, dtype=float)
    last = abs(lam * f.coeffs[-1]) * np.power(x, params.rho * (K - 1))
    return residual_report(
        f"eigen[{params.alphas},{params.nus},lam={lam},K={K}]",
        x,
        r(x),
        lam * f(x),
        tolerance,
        tail_bound=float(last.max()),
    )


def eigen_decay(
    params: MultiIndexParams,
    lam: float,
    grid: Sequence[float],
    floor: float = 1e-12,
    k_max: int = 200,
) -> tuple[int, float, float]:
    """Return ``(K, r(K), r(2K))`` for the largest K with r(2K) above ``floor``.

    Past that K both residuals sit at double-precision round-off and their
    ratio says nothing about the truncation tail.
    """
    best = None
    for K in range(2, k_max + 1):
        r2 = eigen_residual(params, lam, 2 * K, grid).max_abs_residual
        if r2 <= floor:
            break
        best = K, r2
    if best is None:
        raise ValueError("residual is below the round-off floor already at K=4")
    K, r2 = best
    return K, eigen_residual(params, lam, K, grid).max_abs_residual, r2
