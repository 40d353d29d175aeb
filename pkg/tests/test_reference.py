"""The oracles themselves, checked against mpmath at 30 digits."""
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from multiwright import reference as ref

mpmath.mp.dps = 30


def test_wright_examples():
    assert_allclose(ref.wright(1, 1, 2.0), ref.bessel_i(0, 2 * math.sqrt(2.0)), rtol=1e-14)
    assert ref.wright(0.7, 2.5, 0.0) == 1 / math.gamma(2.5)
    assert_allclose(ref.wright(0.5, 1, 1), 2.7773451005009957, rtol=1e-14)


def test_mittag_leffler_examples():
    assert_allclose(ref.mittag_leffler(1, 1, 1.3), math.exp(1.3), rtol=1e-14)
    assert ref.mittag_leffler(0.5, 1.7, 0.0) == 1 / math.gamma(1.7)
    assert_allclose(ref.mittag_leffler(0.5, 1, 1), 5.0089800807622835, rtol=1e-14)


def test_multi_index_mittag_leffler_examples():
    assert_allclose(ref.multi_index_mittag_leffler([1, 1], [1, 1], 1.0), 2.2795853023360673, rtol=1e-14)
    assert_allclose(
        ref.multi_index_mittag_leffler([1, 1], [1.5, 2], 0.0), 1 / (math.gamma(1.5) * math.gamma(2)), rtol=1e-15
    )
    assert_allclose(ref.multi_index_mittag_leffler([0.5, 1.2], [1, 0.8], 0.9), 2.26844984019566, rtol=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.3, 2), st.floats(0.2, 3), st.floats(-4, 4))
def test_single_index_collapse(alpha, beta, z):
    assert ref.multi_index_mittag_leffler([alpha], [beta], z) == ref.mittag_leffler(alpha, beta, z)


def test_hyper_bessel_examples():
    x = 1.7
    assert_allclose(ref.hyper_bessel(ref.HyperBesselIndices((0,)), x), float(mpmath.besselj(0, 2 * math.sqrt(x))), rtol=1e-13)
    assert_allclose(ref.hyper_bessel(ref.HyperBesselIndices((1, 0.5)), 0.0), 1 / (math.gamma(2) * math.gamma(1.5)))
    assert_allclose(ref.hyper_bessel(ref.HyperBesselIndices((1, 0.5)), 1.0), 0.7767374382169873, rtol=1e-13)
    assert ref.HyperBesselIndices((1, 2, 3)).d == 3
    with pytest.raises(ValueError):
        ref.HyperBesselIndices(())


def test_bessel_i_examples():
    assert ref.bessel_i(0, 0) == 1.0
    assert ref.bessel_i(1, 0) == 0.0
    assert_allclose(ref.bessel_i(0, 2), 2.2795853023360673, rtol=1e-15)
    assert_allclose(ref.bessel_i(1.5, 0.8), 0.20276790791867891, rtol=1e-14)


def test_struve_examples():
    assert ref.struve_l(0, 0) == 0.0
    assert ref.struve_l(1, 0) == 0.0
    assert_allclose(ref.struve_l(0, 2), 1.9374337579914457, rtol=1e-14)
    assert_allclose(ref.struve_l(1, 2), 1.1027597873677158, rtol=1e-14)
    assert_allclose(ref.struve_l(0.5, 1.3), 0.67943709115994672, rtol=1e-14)


def test_bessel_clifford_examples():
    assert ref.bessel_clifford(0, 1.0) == pytest.approx(ref.bessel_i(0, 2.0), rel=1e-14)
    for n in range(5):
        assert ref.bessel_clifford(n, 0.0) == 1 / math.factorial(n)
    assert_allclose(ref.bessel_clifford(1, 1.0), ref.bessel_i(1, 2.0), rtol=1e-14)


def test_bessel_clifford_third_examples():
    assert_allclose(ref.bessel_clifford_third(0.4, 1.1, 0.0), 1 / (math.gamma(1.4) * math.gamma(2.1)))
    assert_allclose(ref.bessel_clifford_third(0, 0, 1.0), 0.12044213230101765, rtol=1e-14)
    assert_allclose(ref.bessel_clifford_third(0.7, 1.3, 2.0), 0.51271729053198726, rtol=1e-13)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.1, 2), st.floats(-0.5, 3), st.floats(-3, 3))
def test_wright_mpmath(lam, mu, z):
    want = mpmath.nsum(lambda k: mpmath.mpf(z) ** k * mpmath.rgamma(lam * k + mu) / mpmath.factorial(k), [0, mpmath.inf])
    assert_allclose(ref.wright(lam, mu, z), float(want), rtol=1e-11, atol=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.9, 4), st.floats(0, 6))
def test_bessel_i_mpmath(order, x):
    assert_allclose(ref.bessel_i(order, x), float(mpmath.besseli(order, x)), rtol=1e-13, atol=1e-300)


@settings(max_examples=50, deadline=None)
@given(st.floats(0, 4), st.floats(0, 6))
def test_struve_mpmath(order, x):
    assert_allclose(ref.struve_l(order, x), float(mpmath.struvel(order, x)), rtol=1e-13, atol=1e-300)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.9, 3), st.floats(0.01, 8))
def test_bessel_clifford_closed_form(order, x):
    closed = x ** (-order / 2) * mpmath.besseli(order, 2 * math.sqrt(x))
    assert_allclose(ref.bessel_clifford(order, x), float(closed), rtol=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.9, 2), st.floats(-0.9, 2), st.floats(0, 5))
def test_bessel_clifford_third_mpmath(mu, nu, x):
    want = mpmath.hyper([], [mu + 1, nu + 1], -x) / (mpmath.gamma(mu + 1) * mpmath.gamma(nu + 1))
    assert_allclose(ref.bessel_clifford_third(mu, nu, x), float(want), rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize(
    "call",
    [
        lambda: ref.wright(0.0, 1, 1),
        lambda: ref.mittag_leffler(-1, 1, 1),
        lambda: ref.mittag_leffler(1, 1, 6),
        lambda: ref.hyper_bessel(ref.HyperBesselIndices((1,)), 11),
        lambda: ref.bessel_i(-1.5, 1),
        lambda: ref.struve_l(1, -1),
        lambda: ref.bessel_clifford(-2, 1),
        lambda: ref.bessel_clifford_third(-1, 0, 1),
    ],
)
def test_domain_errors(call):
    with pytest.raises(ValueError):
        call()
