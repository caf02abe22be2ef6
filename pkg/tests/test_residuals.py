import math

import pytest

from ksdyon.numerics import Grid1D
from ksdyon.residuals import OPERATORS, default_eigenvalue, derivatives, residual, select_convention
from ksdyon.spectra import QuantumNumbersPar
from ksdyon.wavefunctions import AngularState, ParabolicState, RadialState


def test_derivatives_of_polynomial_are_exact():
    f = lambda x: x**4 - 2 * x**3 + x
    f0, d1, d2 = derivatives(f, 1.5, 1e-2)
    assert d1 == pytest.approx(4 * 1.5**3 - 6 * 1.5**2 + 1, abs=1e-10)
    assert d2 == pytest.approx(12 * 1.5**2 - 12 * 1.5, abs=1e-8)


def test_radial_ground_residual():
    assert residual("eq34", RadialState(0, 1.0, 1.0)) < 1e-7


def test_constant_angular_residual():
    assert residual("eq35", AngularState(0, 0, 0)) < 1e-10


def test_parabolic_ground_residual():
    st = ParabolicState.bound(QuantumNumbersPar(0, 0, 0, 0))
    assert residual("eq43", st) < 1e-7
    assert residual("eq44", st) < 1e-7


@pytest.mark.parametrize("n_theta", range(4))
@pytest.mark.parametrize("p,m", [(0, 0), (1, 1), (3, 1), (-2, 1), (2, -3)])
@pytest.mark.parametrize("branch", ["eq36", "eq37"])
def test_angular_residuals(n_theta, p, m, branch):
    assert residual("eq35", AngularState(n_theta, p, m, branch)) < 1e-6


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("k", [1.0, 3.0, math.sqrt(13), 7.0])
def test_radial_residuals(n, k):
    assert residual("eq34", RadialState.bound(n, k)) < 1e-6


@pytest.mark.parametrize("p", [0, 0.5, 1, 2.5, -3])
@pytest.mark.parametrize("m", [-1, 0, 2])
@pytest.mark.parametrize("nodes", range(4))
def test_parabolic_residuals(p, m, nodes):
    st = ParabolicState.bound(QuantumNumbersPar(p, m, nodes, 3 - nodes))
    assert residual("eq43", st) < 1e-6
    assert residual("eq44", st) < 1e-6


def test_wrong_eigenvalue_is_detected():
    st = RadialState(0, 1.0, 1.0)
    assert residual("eq34", st, eigenvalue=-0.4) > 1e-2


def test_fit_eigenvalue_for_angular():
    st = AngularState(1, 1, 1)
    assert residual("eq35", st, eigenvalue="fit") < 1e-6


def test_explicit_grid():
    grid = Grid1D(0.5, 10.0, 2000, "radial-semiline")
    assert residual("eq34", RadialState.bound(1, 3.0), grid=grid) < 1e-6


def test_printed_forms_fail():
    st = AngularState(0, 1, 1, "eq36", "printed", check_regular=False)
    assert residual("eq35", st) > 1e-3
    st = ParabolicState(1, 0, 0, 0, 1.0, "half-exponent")
    assert residual("eq43", st) > 1e-3


def test_convention_selection():
    assert select_convention("angular") == "half-angle"
    assert select_convention("parabolic") == "printed"
    with pytest.raises(ValueError):
        select_convention("radial")


def test_default_eigenvalues():
    assert default_eigenvalue("eq34", RadialState(0, 1.0, 1.0), None) == -0.5
    st = ParabolicState(1, 1, 2, 0, 0.5)
    assert default_eigenvalue("eq43", st, None) == pytest.approx(-0.5 * 3.5)
    assert set(OPERATORS) == {"eq34", "eq35", "eq43", "eq44"}
    with pytest.raises(ValueError):
        residual("eq99", st)
