"""Data behind the four panels of the W_{alpha,beta,nu} plots.

Panel map (value column for each nu):
    a: W_{0,1,nu}(x)
    b: W_{1,1,nu}(x)
    c: W_{1/2,1/2,nu}(sqrt(x))
    d: W_{1/2,1,nu}(x)
"""
from __future__ import annotations

import numpy as np

from .series import ThreeParams, eval_three_param

__all__ = ["NU_VALUES", "PANELS", "figure_panel", "format_csv"]

NU_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)

# panel -> (alpha, beta); the argument is x**beta in every panel
PANELS = {
    "a": (0.0, 1.0),
    "b": (1.0, 1.0),
    "c": (0.5, 0.5),
    "d": (0.5, 1.0),
}


def figure_panel(
    panel: str, x_min: float = 0.0, x_max: float = 3.0, points: int = 121
) -> tuple[list[str], np.ndarray]:
    """Header and a (points, 1 + len(NU_VALUES)) array: x then one column per nu."""
    if panel not in PANELS:
        raise ValueError(f"panel must be one of {sorted(PANELS)}, got {panel!r}")
    if points < 2 or not x_min < x_max:
        raise ValueError("need points >= 2 and x_min < x_max")
    if x_min < 0:
        raise ValueError("x must be non-negative")
    alpha, beta = PANELS[panel]
    x = np.linspace(x_min, x_max, points)
    cols = [x]
    for nu in NU_VALUES:
        p = ThreeParams(alpha, beta, nu)
        vals = []
        for xi in x:
            sv = eval_three_param(p, xi**beta)
            if not sv.converged:
                raise ArithmeticError(f"panel {panel}: no convergence at x={xi}, nu={nu}")
            vals.append(sv.value)
        cols.append(np.array(vals))
    header = ["x"] + [f"nu={nu:g}" for nu in NU_VALUES]
    return header, np.column_stack(cols)


def format_csv(header: list[str], rows) -> str:
    """Comma separated, LF line endings, 17 significant digits."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format(float(v), ".17g") for v in row))
    return "\n".join(lines) + "\n"
