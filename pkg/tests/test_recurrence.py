import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate

from multiwright import reference as ref
from multiwright.analysis import (
    recurrence_residual_bessel_clifford,
    recurrence_residual_main,
    recurrence_residual_mittag_leffler,
    recurrence_residual_wright,
    three_param_series,
)
from multiwright.series import ThreeParams, eval_three_param

GRID = np.linspace(0.1, 1.0, 10)


def test_three_param_series_evaluates_function():
    p = ThreeParams(0.4, 0.6, 1.1)
    f = three_param_series(p, 60)
    for x in (0.2, 0.9):
        assert_allclose(f(x), eval_three_param(p, x**0.6).value, rtol=1e-13)


def test_main_recurrence_example():
    rep = recurrence_residual_main(ThreeParams(0.5, 0.5, 1.25), GRID, K=40)
    assert rep.max_abs_residual <= 1e-8


@pytest.mark.parametrize("p", [ThreeParams(0.3, 0.9, 0.4), ThreeParams(1.0, 1.0, 2.0), ThreeParams(0.8, 0.35, 1.7)])
def test_main_recurrence_draws(p):
    assert recurrence_residual_main(p, GRID, K=50).passed


def test_main_recurrence_domain():
    with pytest.raises(ValueError):
        recurrence_residual_main(ThreeParams(0.5, 1.5, 1.0), GRID)
    with pytest.raises(ValueError):
        recurrence_residual_main(ThreeParams(0.9, 0.3, 0.1), GRID)


@pytest.mark.parametrize("n, x", [(0, 1.0), (3, 2.0), (7, 0.4)])
def test_bessel_clifford_three_term(n, x):
    assert recurrence_residual_bessel_clifford(n, [x]).max_abs_residual <= 1e-10


def test_bessel_clifford_matches_series():
    # C_n(x) = W_{1,1,n+1}(x)
    for n in range(4):
        for x in (0.3, 2.5):
            assert_allclose(eval_three_param(ThreeParams(1, 1, n + 1), x).value, ref.bessel_clifford(n, x), rtol=1e-13)


def test_bessel_clifford_rejects_fractional_n():
    with pytest.raises(ValueError):
        recurrence_residual_bessel_clifford(1.5, [1.0])


def caputo_first_term_by_quadrature(alpha, beta, z):
    """z^a D^a (t^{a+b-1} E_{a,a+b}(t^a)) at z, with the Caputo integral done by quad.

    d/dt [t^{a+b-1} E_{a,a+b}(t^a)] = t^{a+b-2} E_{a,a+b-1}(t^a).
    """
    def smooth(t):
        return ref.mittag_leffler(alpha, alpha + beta - 1, t**alpha)

    val, _ = integrate.quad(smooth, 0, z, weight="alg", wvar=(alpha + beta - 2, -alpha), epsabs=1e-13, epsrel=1e-12)
    return z**alpha * val / math.gamma(1 - alpha)


def test_mittag_leffler_printed_form_has_constant_offset():
    alpha, beta, z = 0.5, 1.5, 0.3
    first = caputo_first_term_by_quadrature(alpha, beta, z)
    second = 2 * z ** (alpha + beta - 1) * ref.mittag_leffler(alpha, beta, z**alpha)
    third = z ** (beta - 1) * ref.mittag_leffler(alpha, beta - alpha, z**alpha)
    residual = first - second + third
    # quadrature oracle: the printed left side equals z^(b-1)/Gamma(b-a), not 0
    assert_allclose(residual, z ** (beta - 1) / math.gamma(beta - alpha), rtol=1e-9)
    rep = recurrence_residual_mittag_leffler(alpha, beta, [z], K=50, form="printed")
    assert_allclose(rep.max_abs_residual, abs(residual), rtol=1e-9)


def test_mittag_leffler_printed_form_grid():
    rep = recurrence_residual_mittag_leffler(0.5, 1.5, GRID, K=50, form="printed")
    assert not rep.passed
    assert_allclose(rep.max_abs_residual, 1.0, rtol=1e-9)  # z^0.5/Gamma(1) at z = 1


@pytest.mark.parametrize("alpha, beta", [(0.5, 1.5), (0.3, 0.9), (1.0, 0.5), (0.8, 2.2)])
def test_mittag_leffler_caputo_limit_form(alpha, beta):
    assert recurrence_residual_mittag_leffler(alpha, beta, GRID, K=50, form="caputo-limit").max_abs_residual <= 1e-8


def test_mittag_leffler_printed_form_holds_when_offset_vanishes():
    # 1/Gamma(beta - alpha) = 0 for beta = alpha
    assert recurrence_residual_mittag_leffler(1.0, 1.0, GRID, K=50, form="printed").passed


def test_mittag_leffler_domain():
    with pytest.raises(ValueError):
        recurrence_residual_mittag_leffler(0.5, 0.4, GRID)
    with pytest.raises(ValueError):
        recurrence_residual_mittag_leffler(0.5, 1.5, GRID, form="other")


def test_wright_example():
    frac, first = recurrence_residual_wright(0.5, 1.5, GRID, K=40)
    assert frac.max_abs_residual <= 1e-8 and first.max_abs_residual <= 1e-8


@pytest.mark.parametrize("nu", [0.5, 1.0, 2.3])
def test_wright_derivative_at_lambda_one(nu):
    # d/dz W_{1,nu-1}(z) = W_{1,nu}(z), checked by finite differences on the oracle
    frac, first = recurrence_residual_wright(1.0, nu, GRID, K=50)
    assert first.passed
    z, h = 0.6, 1e-5
    fd = (ref.wright(1, nu - 1, z + h) - ref.wright(1, nu - 1, z - h)) / (2 * h)
    assert_allclose(fd, ref.wright(1, nu, z), rtol=1e-8)


def test_wright_small_z_leading_term():
    frac, _ = recurrence_residual_wright(0.6, 1.2, [1e-4, 1e-3], K=30)
    # both sides behave like z^(nu-1)/Gamma(nu) and cancel to round-off
    assert frac.max_rel_residual < 1e-13


def test_wright_domain():
    with pytest.raises(ValueError):
        recurrence_residual_wright(1.5, 1.0, GRID)
    with pytest.raises(ValueError):
        recurrence_residual_wright(0.5, 0.4, GRID)
