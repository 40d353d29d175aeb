import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from multiwright.figure import NU_VALUES, PANELS, figure_panel, format_csv
from multiwright.gamma import reciprocal_gamma
from multiwright.series import ThreeParams, eval_three_param


@pytest.fixture(scope="module")
def panels():
    return {p: figure_panel(p) for p in PANELS}


def test_shape_and_header(panels):
    for header, data in panels.values():
        assert header == ["x", "nu=0", "nu=0.25", "nu=0.5", "nu=0.75", "nu=1", "nu=1.25", "nu=1.5", "nu=1.75", "nu=2"]
        assert data.shape == (121, 10)
        assert data[0, 0] == 0.0 and data[-1, 0] == 3.0


def test_panel_a_exponential(panels):
    _, data = panels["a"]
    assert_allclose(data[:, 1], np.exp(data[:, 0]), rtol=1e-12)
    x = data[1:, 0]
    assert_allclose(data[1:, 5], np.expm1(x) / x, rtol=1e-12)


def test_origin_row(panels):
    for panel, (_, data) in panels.items():
        alpha, _ = PANELS[panel]
        assert_allclose(data[0, 1:], [reciprocal_gamma(1 - alpha + nu) for nu in NU_VALUES], rtol=1e-15)


@pytest.mark.parametrize("panel", ["a", "b"])
def test_monotone(panels, panel):
    _, data = panels[panel]
    assert np.all(np.diff(data[:, 1:], axis=0) > 0)


def test_panel_c_uses_square_root(panels):
    _, data = panels["c"]
    x = data[50, 0]
    assert data[50, 3] == eval_three_param(ThreeParams(0.5, 0.5, 0.5), math.sqrt(x)).value


def test_bad_panel():
    with pytest.raises(ValueError):
        figure_panel("e")
    with pytest.raises(ValueError):
        figure_panel("a", 1.0, 0.5)


def test_csv_round_trip(panels):
    header, data = panels["d"]
    text = format_csv(header, data)
    assert "\r" not in text and text.endswith("\n")
    lines = text.splitlines()
    assert lines[0].split(",") == header
    back = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    assert np.array_equal(back, data)
