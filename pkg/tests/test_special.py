import math

import mpmath
import numpy as np
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from ksdyon import special
from ksdyon.errors import InvalidParameterError


def test_laguerre_examples():
    assert special.laguerre(0, 2.5, 3.7) == 1.0
    assert special.laguerre(1, 1, 0.0) == 2.0
    assert special.laguerre(2, 1, 2.0) == pytest.approx(-1.0)
    assert isinstance(special.laguerre(2, 1, np.array([0.0, 1.0])), np.ndarray)


def test_laguerre_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        special.laguerre(-1, 0, 1.0)
    with pytest.raises(InvalidParameterError):
        special.laguerre(1, -1.0, 1.0)


def _mp_laguerre(n, k, x):
    with mpmath.workdps(60):
        k, x = mpmath.mpf(k), mpmath.mpf(x)
        total = mpmath.mpf(0)
        for i in range(n + 1):
            total += (-1) ** i * mpmath.binomial(n + k, n - i) * x**i / mpmath.factorial(i)
        return float(total)


@pytest.mark.parametrize("k", [0.0, 1.0, 3.0, math.sqrt(13) - 1])
def test_laguerre_recurrence_against_mpmath(k):
    x = np.linspace(0.0, 40.0, 81)
    for n in range(13):
        ours = special.laguerre(n, k, x)
        ref = np.array([_mp_laguerre(n, k, xi) for xi in x])
        scale = np.maximum(1.0, np.abs(ref))
        assert np.max(np.abs(ours - ref) / scale) < 1e-10


@pytest.mark.parametrize("k", [0.0, 1.0, 3.0, math.sqrt(13) - 1])
def test_laguerre_recurrence_against_series(k):
    # the alternating series loses digits to cancellation, so compare
    # relative to the sum of absolute term sizes
    x = np.linspace(0.0, 40.0, 81)
    for n in range(13):
        a = special.laguerre(n, k, x)
        b = special.laguerre_series(n, k, x)
        size = special.laguerre_series(n, k, -x)  # all terms positive at -x
        assert np.max(np.abs(a - b) / np.maximum(1.0, size)) < 1e-13


def test_laguerre_orthogonality():
    for k in (0.0, 1.0, 3.0, math.sqrt(13) - 1):
        rule = special.quadrature("laguerre", 24, alpha=k)
        for n in range(7):
            for m in range(7):
                val = rule.integrate(lambda x: special.laguerre(n, k, x) * special.laguerre(m, k, x))
                target = special.laguerre_norm(n, k) if n == m else 0.0
                assert abs(val - target) < 1e-8


def test_2f1_examples():
    assert special.gauss_2f1_terminating(0, 3.3, 1.2, 0.7) == 1.0
    assert special.gauss_2f1_terminating(1, 2, 1, 0.5) == pytest.approx(0.0)
    with pytest.raises(InvalidParameterError):
        special.gauss_2f1_terminating(1, 2, 0, 0.5)
    with pytest.raises(InvalidParameterError):
        special.gauss_2f1_terminating(1, 2, -3, 0.5)
    res = special.gauss_2f1_terminating(4, 1.5, 2.5, 0.3, full_output=True)
    assert res.degree == 4 and res.terms_summed == res.degree + 1


def _mp_2f1_terminating(n, b, c, x):
    # hyp2f1 cannot certify an exactly zero sum, so sum the finite series directly
    with mpmath.workdps(60):
        b, c, x = mpmath.mpf(b), mpmath.mpf(c), mpmath.mpf(x)
        return float(mpmath.fsum(mpmath.rf(-n, i) * mpmath.rf(b, i) / (mpmath.rf(c, i) * mpmath.factorial(i))
                                 * x**i for i in range(n + 1)))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 5), st.floats(-4, 6), st.floats(0.5, 6), st.floats(-1, 1))
@example(n=5, b=5.0, c=0.5, x=0.5)
def test_2f1_against_mpmath(n, b, c, x):
    ours = special.gauss_2f1_terminating(n, b, c, x)
    ref = _mp_2f1_terminating(n, b, c, x)
    assert ours == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_2f1_matches_jacobi():
    from scipy.special import eval_jacobi, poch
    t = np.linspace(-1, 1, 21)
    for n in range(6):
        for a, b in [(0, 0), (1, 2), (2.5, 0.5)]:
            jac = eval_jacobi(n, a, b, t)
            ours = poch(a + 1, n) / math.factorial(n) * special.gauss_2f1_terminating(n, n + a + b + 1, a + 1, (1 - t) / 2)
            assert np.allclose(ours, jac, rtol=1e-11, atol=1e-12)


def test_1f1_examples():
    assert special.kummer_1f1_terminating(0, 2.0, 5.0) == 1.0
    assert special.kummer_1f1_terminating(-1, 2, 1.0) == pytest.approx(0.5)
    x = np.linspace(0, 10, 50)
    assert np.allclose(special.laguerre(2, 1, x),
                       3 * special.kummer_1f1_terminating(-2, 2, x), rtol=1e-12, atol=1e-12)
    assert special.laguerre_kummer_ratio(2, 1) == pytest.approx(3.0)
    with pytest.raises(InvalidParameterError):
        special.kummer_1f1_terminating(1, 2, 1.0)
    with pytest.raises(InvalidParameterError):
        special.kummer_1f1_terminating(-1, -2, 1.0)


def test_1f1_laguerre_identity_grid():
    x = np.linspace(0, 30, 50)
    for n in range(8):
        for k in (0.0, 1.0, math.sqrt(13), 4.5):
            lhs = special.laguerre(n, k, x)
            rhs = special.laguerre_kummer_ratio(n, k) * special.kummer_1f1_terminating(-n, k + 1, x)
            assert np.max(np.abs(lhs - rhs) / np.maximum(1, np.abs(lhs))) < 1e-10


def test_quadrature_rules():
    rule = special.quadrature("legendre", 2)
    assert rule.integrate(lambda x: x * x) == pytest.approx(2 / 3, abs=1e-15)
    assert np.all(np.diff(rule.nodes) > 0) and np.all(rule.weights > 0)
    assert rule.weights.sum() == pytest.approx(rule.measure)
    lag = special.quadrature("laguerre", 10)
    assert lag.integrate(lambda x: x) == pytest.approx(1.0, abs=1e-13)
    assert lag.weights.sum() == pytest.approx(lag.measure)
    gen = special.quadrature("laguerre", 12, alpha=2.5)
    assert gen.weights.sum() == pytest.approx(math.gamma(3.5))
    shifted = special.quadrature("legendre", 5, domain=(0.0, 2.0))
    assert shifted.integrate(lambda x: x**3) == pytest.approx(4.0)
    with pytest.raises(InvalidParameterError):
        special.quadrature("hermite", 4)
    with pytest.raises(InvalidParameterError):
        special.quadrature("legendre", 0)


def test_pochhammer():
    assert special.pochhammer(2, 2) == 6.0
    assert special.pochhammer(0.5, 0) == 1.0
