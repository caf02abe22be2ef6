import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import lpmv

from ksdyon.errors import InvalidParameterError, PoleDivergenceError
from ksdyon.ksmap import Point3, to_hyperspherical, to_parabolic
from ksdyon.numerics import solve_angular
from ksdyon.spectra import QuantumNumbersHS, QuantumNumbersPar
from ksdyon.wavefunctions import (
    AngularState,
    HypersphericalState,
    ParabolicState,
    RadialState,
    admissible_branches,
    angular_eval,
    assemble_psi_hyperspherical,
    assemble_psi_parabolic,
    normalize,
    parabolic_eval,
    parabolic_factor,
    radial_eval,
    radial_overlap,
)


def sign_changes(values):
    s = np.sign(values[np.abs(values) > 1e-14 * np.max(np.abs(values))])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def test_radial_ground_is_exponential():
    st_ = RadialState(0, 1.0, 1.0)
    r = np.linspace(0, 10, 101)
    assert np.allclose(radial_eval(st_, r), np.exp(-r), rtol=1e-14)


def test_radial_ground_decay_at_rho_100():
    assert abs(radial_eval(RadialState(0, 1.0, 0.7), 100 / (2 * 0.7))) < 1e-20


@pytest.mark.parametrize("n,k", [(0, 1.0), (2, 3.0), (4, math.sqrt(13)), (3, 7.0)])
def test_radial_decays(n, k):
    # the polynomial prefactor delays the e^-rho/2 tail for excited states
    st_ = RadialState(n, k, 0.7)
    assert abs(radial_eval(st_, 200 / (2 * 0.7))) < 1e-20


@pytest.mark.parametrize("n", range(5))
def test_radial_node_count(n):
    st_ = RadialState(n, math.sqrt(13), 1.0)
    r = np.linspace(1e-6, 60, 20001)
    assert sign_changes(radial_eval(st_, r)) == n


def test_radial_rejects_negative_r():
    with pytest.raises(InvalidParameterError):
        radial_eval(RadialState(0, 1.0, 1.0), -1.0)


def test_angular_s_wave_constant():
    z = angular_eval(AngularState(0, 0, 0), np.linspace(0, math.pi, 11))
    assert np.allclose(z, z[0])


@pytest.mark.parametrize("p", [0, 1, 2])
@pytest.mark.parametrize("n_theta", [0, 1, 2])
def test_angular_legendre_limit(p, n_theta):
    j = p + n_theta
    if j > 4:
        pytest.skip("beyond the compared range")
    constant = solve_angular(p, 0, n_levels=n_theta + 1).eigenvalues[n_theta]
    ell = round(0.5 * (-1 + math.sqrt(1 + 4 * constant)))
    assert ell == j
    theta = np.linspace(0.05, math.pi - 0.05, 200)
    ours = angular_eval(AngularState(n_theta, p, 0), theta)
    ref = lpmv(p, ell, np.cos(theta))
    ratio = ours / ref
    assert np.allclose(ratio, ratio[0], rtol=1e-9)


@pytest.mark.parametrize("n_theta", range(5))
@pytest.mark.parametrize("p,m", [(0, 0), (1, 1), (2, 1), (3, 2)])
def test_angular_node_count(n_theta, p, m):
    theta = np.linspace(1e-4, math.pi - 1e-4, 20001)
    assert sign_changes(angular_eval(AngularState(n_theta, p, m), theta)) == n_theta


def test_angular_branches_agree():
    theta = np.linspace(0.1, 3.0, 50)
    a = angular_eval(AngularState(2, 1, 1, "eq36"), theta)
    b = angular_eval(AngularState(2, 1, 1, "eq37"), theta)
    ratio = a / b
    assert np.allclose(ratio, ratio[0], rtol=1e-12)


def test_printed_convention_diverges():
    with pytest.raises(PoleDivergenceError):
        normalize(AngularState(0, 1, 1, convention="printed", check_regular=False))
    assert admissible_branches(1, 1) == ["eq36", "eq37"]
    assert admissible_branches(1, 1, convention="printed") == []


def test_parabolic_zero_at_origin_for_positive_p():
    st_ = ParabolicState(2, 1, 0, 0, 1.0)
    assert parabolic_factor(st_, "xi", 0.0) == 0.0


@pytest.mark.parametrize("m1,m2", [(0, 0), (1, 0), (2, 3), (4, 1)])
def test_parabolic_node_counts(m1, m2):
    st_ = ParabolicState(1, 0, m1, m2, 1.0)
    x = np.linspace(1e-6, 60, 20001)
    assert sign_changes(parabolic_factor(st_, "xi", x)) == m1
    assert sign_changes(parabolic_factor(st_, "eta", x)) == m2


def test_parabolic_rejects_bad_input():
    st_ = ParabolicState(0, 0, 0, 0, 1.0)
    with pytest.raises(InvalidParameterError):
        parabolic_factor(st_, "zeta", 1.0)
    with pytest.raises(InvalidParameterError):
        parabolic_eval(st_, -1.0, 1.0)


def test_ground_states_proportional_on_3d_grid():
    hs = HypersphericalState.from_quantum_numbers(QuantumNumbersHS(0, 0, 0, 0, 0))
    par = ParabolicState.bound(QuantumNumbersPar(0, 0, 0, 0))
    rng = np.random.default_rng(3)
    pts = rng.uniform(-4, 4, size=(200, 3))
    ratios = []
    for x in pts:
        h = to_hyperspherical(Point3(*x))
        q = to_parabolic(Point3(*x))
        a = assemble_psi_hyperspherical(hs, 0.0, h.r, h.theta, h.phi)
        b = assemble_psi_parabolic(par, 0.0, q.xi, q.eta, q.phi)
        ratios.append(a / b)
    ratios = np.array(ratios)
    assert np.allclose(ratios, ratios[0], rtol=1e-9, atol=0)


def test_excited_parabolic_state_is_bound_energy():
    qn = QuantumNumbersPar(1, 1, 1, 0)
    st_ = ParabolicState.bound(qn)
    assert st_.energy() == pytest.approx(-0.5 / qn.denominator**2)


@settings(max_examples=40, deadline=None)
@given(st.floats(0, 4 * math.pi), st.floats(0, 4 * math.pi), st.floats(0.1, 5), st.floats(0.05, 3.0))
def test_modulus_independent_of_phases(gamma, phi, r, theta):
    qn = QuantumNumbersHS.from_j(0, 1, 2, 1, 0)
    a = assemble_psi_hyperspherical(qn, gamma, r, theta, phi)
    b = assemble_psi_hyperspherical(qn, 0.0, r, theta, 0.0)
    assert abs(a) == pytest.approx(abs(b), rel=1e-12)
    c = assemble_psi_hyperspherical(qn, gamma + 4 * math.pi, r, theta, phi)
    assert c == pytest.approx(a, rel=1e-9, abs=1e-12)


def test_ground_modulus_is_radial():
    qn = QuantumNumbersHS(0, 0, 0, 0, 0)
    hs = HypersphericalState.from_quantum_numbers(qn)
    vals = [abs(assemble_psi_hyperspherical(qn, g, 1.3, 0.7, f)) for g, f in [(0, 0), (1, 2), (3, 5)]]
    assert np.allclose(vals, radial_eval(hs.radial, 1.3) * angular_eval(hs.angular, 0.7), rtol=1e-14)


def test_parabolic_phase_uses_4pi_azimuth():
    qn = QuantumNumbersPar(0.5, 1, 0, 0)
    a = assemble_psi_parabolic(qn, 0.3, 1.0, 2.0, 0.5)
    b = assemble_psi_parabolic(qn, 0.3, 1.0, 2.0, 0.5 + 4 * math.pi)
    assert a == pytest.approx(b, rel=1e-12)


def test_normalize_ground_radial():
    st_, c = normalize(RadialState(0, 1.0, 1.0))
    assert c == pytest.approx(2.0, rel=1e-12)
    _, c2 = normalize(st_)
    assert abs(c2 - 1) < 1e-12


@pytest.mark.parametrize("state", [
    AngularState(2, 1, 1),
    HypersphericalState.from_quantum_numbers(QuantumNumbersHS.from_j(1, 2, 1, 1, 1)),
    ParabolicState.bound(QuantumNumbersPar(1, 1, 1, 2)),
    ParabolicState.bound(QuantumNumbersPar(0.5, 1, 0, 1)),
])
def test_normalize_idempotent(state):
    st_, _ = normalize(state)
    _, c = normalize(st_)
    assert abs(c - 1) < 1e-12


def test_parabolic_norm_matches_cartesian_quadrature():
    st_, _ = normalize(ParabolicState.bound(QuantumNumbersPar(0, 0, 0, 0)))
    # integrate |psi|^2 over r with the r^2 measure: psi depends on r only for the ground state
    r = np.linspace(0, 60, 200001)
    vals = parabolic_eval(st_, r, r) ** 2
    total = 4 * math.pi * np.trapezoid(vals * r * r, r)
    assert total == pytest.approx(1.0, rel=1e-8)


def test_radial_orthogonality():
    k = math.sqrt(13)
    a, _ = normalize(RadialState.bound(0, k))
    b, _ = normalize(RadialState.bound(1, k))
    assert abs(radial_overlap(a, b)) < 1e-8
    assert radial_overlap(a, a) == pytest.approx(1.0, rel=1e-10)


def test_normalize_rejects_unknown_type():
    with pytest.raises(TypeError):
        normalize(3.0)
