"""Result records shared by the identity checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = ["ResidualReport", "LaplaceComparison", "residual_report"]


@dataclass(frozen=True)
class ResidualReport:
    """One identity evaluated on a grid.

    ``passed`` is decided on the absolute residual only; the relative value
    is kept for diagnostics.
    """

    identity_id: str
    grid: tuple[float, ...]
    max_abs_residual: float
    max_rel_residual: float
    tolerance: float
    tail_bound: float | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_abs_residual <= self.tolerance)


@dataclass(frozen=True)
class LaplaceComparison:
    s: float
    series_value: float
    quadrature_value: float
    printed_value: float | None = None
    abs_diff: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "abs_diff", abs(self.series_value - self.quadrature_value)
        )

    @property
    def printed_abs_diff(self) -> float | None:
        if self.printed_value is None:
            return None
        return abs(self.printed_value - self.quadrature_value)


def residual_report(
    identity_id: str,
    grid: Sequence[float],
    residual: Sequence[float],
    scale: Sequence[float],
    tolerance: float,
    tail_bound: float | None = None,
    note: str = "",
) -> ResidualReport:
    """Build a report from pointwise residuals and the magnitudes they cancel."""
    res = np.abs(np.asarray(residual, dtype=float))
    sc = np.abs(np.asarray(scale, dtype=float))
    rel = res / np.maximum(sc, np.finfo(float).tiny)
    return ResidualReport(
        identity_id=identity_id,
        grid=tuple(float(x) for x in grid),
        max_abs_residual=float(res.max()) if res.size else 0.0,
        max_rel_residual=float(rel.max()) if rel.size else 0.0,
        tolerance=float(tolerance),
        tail_bound=None if tail_bound is None or math.isnan(tail_bound) else float(tail_bound),
        note=note,
    )
