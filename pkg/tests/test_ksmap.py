import math

import numpy as np
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from ksdyon import ksmap
from ksdyon.errors import (
    DegenerateOriginError,
    InvalidParameterError,
    OriginSingularityError,
    StringSingularityError,
)
from ksdyon.ksmap import Point3, Point4
from ksdyon.verify import latitude_circulation, monopole_flux

coord = st.floats(-2.0, 2.0, allow_nan=False)
point4 = st.tuples(coord, coord, coord, coord).filter(lambda u: sum(c * c for c in u) > 1e-6)
angle = st.floats(0.0, 4 * math.pi, allow_nan=False, exclude_max=True)


def test_unit_points():
    x, g = ksmap.ks_forward(Point4(1, 0, 0, 0))
    assert tuple(x) == (1.0, 0.0, 0.0) and x.r == 1.0
    assert g.gamma == 0.0
    x, _ = ksmap.ks_forward(Point4(0, 0, 1, 0))
    assert tuple(x) == (-1.0, 0.0, 0.0)


def test_origin_is_degenerate():
    with pytest.raises(DegenerateOriginError):
        ksmap.ks_forward(Point4(0, 0, 0, 0))
    with pytest.raises(DegenerateOriginError):
        ksmap.fiber_action(Point4(0, 0, 0, 0), 1.0)


def test_nonfinite_rejected():
    with pytest.raises(InvalidParameterError):
        Point4(math.nan, 0, 0, 0)
    with pytest.raises(InvalidParameterError):
        ksmap.FiberAngle(4 * math.pi)


@settings(max_examples=300, deadline=None)
@given(point4)
def test_norm_identity(u):
    x, g = ksmap.ks_forward(Point4(*u))
    uu = sum(c * c for c in u)
    assert abs(x.r - uu) < 1e-12 * max(1.0, uu)
    assert 0.0 <= g.gamma < 4 * math.pi


def test_norm_identity_vectorized():
    rng = np.random.default_rng(1)
    u = rng.uniform(-2, 2, size=(1000, 4))
    x, _ = ksmap.ks_forward_array(u)
    assert np.max(np.abs(np.linalg.norm(x, axis=1) - np.sum(u * u, axis=1))) < 1e-12


@settings(max_examples=300, deadline=None)
@given(point4, angle)
@example(u=(0.0, 0.0, 0.0, -1.0), delta=7.0)
@example(u=(1.0, 0.0, 1.4375, 0.0), delta=1.0)
def test_fiber_action_fixes_base_and_shifts_gamma(u, delta):
    p = Point4(*u)
    x0, g0 = ksmap.ks_forward(p)
    x1, g1 = ksmap.ks_forward(ksmap.fiber_action(p, delta))
    assert np.max(np.abs(x1.as_array() - x0.as_array())) < 1e-12
    assert abs(math.remainder(g1.gamma - g0.gamma - delta, 4 * math.pi)) < 1e-9


def test_fiber_identity_and_full_period():
    p = Point4(1, 0, 0, 0)
    assert tuple(ksmap.fiber_action(p, 0.0)) == (1.0, 0.0, 0.0, 0.0)
    q = ksmap.fiber_action(p, 4 * math.pi)
    assert np.allclose(q.as_array(), p.as_array(), atol=1e-15)
    assert ksmap.ks_forward(q)[1].gamma == pytest.approx(0.0, abs=1e-12) or \
        ksmap.ks_forward(q)[1].gamma == pytest.approx(4 * math.pi, abs=1e-12)
    # half period flips the sign of u but not x
    h = ksmap.fiber_action(p, 2 * math.pi)
    assert np.allclose(h.as_array(), -p.as_array(), atol=1e-15)


@settings(max_examples=200, deadline=None)
@given(point4)
def test_section_round_trip(u):
    x, g = ksmap.ks_forward(Point4(*u))
    x2, g2 = ksmap.ks_forward(ksmap.ks_inverse(x, g))
    assert np.allclose(x2.as_array(), x.as_array(), atol=1e-12)
    assert abs(math.remainder(g2.gamma - g.gamma, 4 * math.pi)) < 1e-9


def test_cartesian_potential_examples():
    assert np.allclose(ksmap.gauge_potential_cartesian(Point3(0, 0, 1)), [0.0, -1.0, 0.0])
    assert np.allclose(ksmap.gauge_potential_cartesian(Point3(1, 0, 0)), [0.0, 0.0, 0.0])
    with pytest.raises(StringSingularityError):
        ksmap.gauge_potential_cartesian(Point3(-1, 0, 0))
    with pytest.raises(StringSingularityError):
        ksmap.gauge_potential_cartesian(Point3(-1, 1e-12, 0))
    with pytest.raises(OriginSingularityError):
        ksmap.gauge_potential_cartesian(Point3(0, 0, 0))


def test_spherical_potential_examples():
    assert ksmap.gauge_potential_spherical(1.0, math.pi / 2) == pytest.approx(1.0)
    assert ksmap.gauge_potential_spherical(2.0, 0.0) == 0.0
    with pytest.raises(StringSingularityError):
        ksmap.gauge_potential_spherical(1.0, math.pi)
    with pytest.raises(OriginSingularityError):
        ksmap.gauge_potential_spherical(0.0, 1.0)


def test_parabolic_potential_examples():
    assert ksmap.gauge_potential_parabolic(0.0, 2.0) == 0.0
    assert ksmap.gauge_potential_parabolic(1.0, 1.0, convention="printed") == pytest.approx(math.sqrt(2))
    # the consistent form equals tan(theta/2)/r at theta = pi/2, r = 1
    assert ksmap.gauge_potential_parabolic(1.0, 1.0) == pytest.approx(1.0)
    with pytest.raises(StringSingularityError):
        ksmap.gauge_potential_parabolic(1.0, 0.0)
    with pytest.raises(InvalidParameterError):
        ksmap.gauge_potential_parabolic(1.0, 1.0, convention="other")


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(0.01, 3.0), st.floats(0.0, 6.28))
def test_potential_magnitude_agrees_across_charts(r, theta, phi):
    x = ksmap.from_hyperspherical(ksmap.HypersphericalPoint(r, theta, phi))
    a_sph = ksmap.gauge_potential_spherical(r, theta)
    assert np.linalg.norm(ksmap.gauge_potential_cartesian(x)) == pytest.approx(a_sph, rel=1e-10)
    par = ksmap.to_parabolic(x)
    assert ksmap.gauge_potential_parabolic(par.xi, par.eta) == pytest.approx(a_sph, rel=1e-9)


def test_latitude_circulation_is_cap_flux():
    for theta in (0.2, 1.0, 2.5, 3.0):
        assert latitude_circulation(theta) == pytest.approx(2 * math.pi * (1 - math.cos(theta)), abs=1e-12)


def test_monopole_flux():
    assert monopole_flux() == pytest.approx(4 * math.pi, abs=1e-6)


def test_chart_examples():
    sph = ksmap.to_hyperspherical(Point3(0, 0, 1))
    assert (sph.r, sph.theta, sph.phi) == pytest.approx((1.0, math.pi / 2, math.pi / 2))
    par = ksmap.to_parabolic(Point3(1, 0, 0))
    assert (par.xi, par.eta) == (0.0, 2.0)
    with pytest.raises(DegenerateOriginError):
        ksmap.to_parabolic(Point3(0, 0, 0))
    with pytest.raises(DegenerateOriginError):
        ksmap.to_hyperspherical(Point3(0, 0, 0))


@settings(max_examples=300, deadline=None)
@given(st.tuples(coord, coord, coord).filter(lambda x: sum(c * c for c in x) > 1e-6))
def test_chart_round_trips(x):
    p = Point3(*x)
    back = ksmap.from_hyperspherical(ksmap.to_hyperspherical(p))
    assert np.allclose(back.as_array(), p.as_array(), atol=1e-12)
    par = ksmap.to_parabolic(p)
    assert 0 <= par.phi < 4 * math.pi and par.phi_half == pytest.approx(par.phi / 2)
    back = ksmap.from_parabolic(par)
    assert np.allclose(back.as_array(), p.as_array(), atol=1e-12)
    assert par.xi + par.eta == pytest.approx(2 * p.r, rel=1e-12)
