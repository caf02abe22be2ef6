"""Kustaanheimo-Stiefel (Hopf) map R^4 -> R^3 x S^1 and the Dirac-monopole
gauge potential in Cartesian, spherical and parabolic coordinates.

Conventions
-----------
With ``z1 = u0 + i u1`` and ``z2 = u2 + i u3``::

    x0 = |z1|^2 - |z2|^2
    x1 + i x2 = 2 conj(z1) z2

so ``|x| = |u|^2`` identically. The fiber angle is
``gamma = 2 arg z1 + phi (mod 4 pi)`` with ``phi = atan2(x2, x1)`` taken in
``[0, 2 pi)``; the fiber action ``z -> exp(i delta / 2) z`` fixes ``x`` and
shifts ``gamma`` by ``delta``.

The Dirac string of the potential lies on the negative ``x0`` half-axis,
and the polar angle ``theta`` is measured from ``+x0``. Parabolic
coordinates are ``xi = r - x0`` and ``eta = r + x0``; their azimuth ``phi``
runs over ``[0, 4 pi)`` because the geometric azimuth enters as ``phi/2``.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import (
    DegenerateOriginError,
    InvalidParameterError,
    OriginSingularityError,
    StringSingularityError,
)

FOUR_PI = 4.0 * math.pi
TWO_PI = 2.0 * math.pi
STRING_TOL = 1e-10  # relative distance to the string, (r + x0) / r


def _finite(*values):
    if not all(math.isfinite(v) for v in values):
        raise InvalidParameterError(f"coordinates must be finite, got {values}")


@dataclasses.dataclass(frozen=True)
class Point4:
    u0: float
    u1: float
    u2: float
    u3: float

    def __post_init__(self):
        _finite(self.u0, self.u1, self.u2, self.u3)

    def __iter__(self):
        return iter((self.u0, self.u1, self.u2, self.u3))

    def as_array(self) -> np.ndarray:
        return np.array(tuple(self), dtype=float)


@dataclasses.dataclass(frozen=True)
class Point3:
    x0: float
    x1: float
    x2: float

    def __post_init__(self):
        _finite(self.x0, self.x1, self.x2)

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2))

    def as_array(self) -> np.ndarray:
        return np.array(tuple(self), dtype=float)

    @property
    def r(self) -> float:
        return math.sqrt(self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2)


@dataclasses.dataclass(frozen=True)
class FiberAngle:
    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma < FOUR_PI:
            raise InvalidParameterError(f"gamma must lie in [0, 4 pi), got {self.gamma!r}")


@dataclasses.dataclass(frozen=True)
class HypersphericalPoint:
    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (self.r >= 0 and 0 <= self.theta <= math.pi and 0 <= self.phi < TWO_PI):
            raise InvalidParameterError(f"invalid spherical point {self}")


@dataclasses.dataclass(frozen=True)
class ParabolicPoint:
    """Parabolic point; ``phi`` in ``[0, 4 pi)`` is twice the geometric azimuth."""

    xi: float
    eta: float
    phi: float

    def __post_init__(self):
        if not (self.xi >= 0 and self.eta >= 0 and 0 <= self.phi < FOUR_PI):
            raise InvalidParameterError(f"invalid parabolic point {self}")

    @property
    def phi_half(self) -> float:
        """Geometric azimuth ``phi / 2`` in ``[0, 2 pi)``."""
        return 0.5 * self.phi


# ---------------------------------------------------------------- KS map


def _azimuth(x1, x2):
    """``atan2(x2, x1)`` in ``[0, 2 pi)``.

    Values within round-off below ``2 pi`` snap to 0 so that points on the
    ``x2 = 0, x1 > 0`` cut land on the same side whatever the sign of the
    round-off in ``x2``. On the axis (``x1 = x2 = 0``, signed zeros
    included) the azimuth is 0.
    """
    phi = np.mod(np.arctan2(x2, x1), TWO_PI)
    phi = np.where((x1 == 0) & (x2 == 0), 0.0, phi)
    return np.where(phi >= TWO_PI * (1.0 - 1e-13), 0.0, phi)


def ks_forward_array(u):
    """Vectorized KS map.

    Parameters
    ----------
    u : array_like, shape (..., 4)

    Returns
    -------
    x : numpy.ndarray, shape (..., 3)
    gamma : numpy.ndarray, shape (...)
        Fiber angle in ``[0, 4 pi)``; NaN where ``u = 0``.
    """
    u = np.asarray(u, dtype=float)
    u0, u1, u2, u3 = u[..., 0], u[..., 1], u[..., 2], u[..., 3]
    x = np.stack(
        [
            u0 * u0 + u1 * u1 - u2 * u2 - u3 * u3,
            2.0 * (u0 * u2 + u1 * u3),
            2.0 * (u0 * u3 - u1 * u2),
        ],
        axis=-1,
    )
    phi = _azimuth(x[..., 1], x[..., 2])
    a1 = np.arctan2(u1, u0)
    a2 = np.arctan2(u3, u2)
    big1 = u0 * u0 + u1 * u1 >= u2 * u2 + u3 * u3
    gamma = np.where(big1, 2.0 * a1 + phi, 2.0 * a2 - phi)
    gamma = np.mod(gamma, FOUR_PI)
    # mod can round up to exactly 4 pi
    gamma = np.where(gamma >= FOUR_PI, 0.0, gamma)
    zero = (u == 0).all(axis=-1)
    gamma = np.where(zero, np.nan, gamma)
    return x, gamma


def ks_forward(u: Point4) -> tuple[Point3, FiberAngle]:
    """Map a point of R^4 to its base point in R^3 and its fiber angle.

    Raises
    ------
    DegenerateOriginError
        At ``u = 0`` where the fiber angle is undefined.
    """
    if all(c == 0 for c in u):
        raise DegenerateOriginError("fiber angle undefined at u = 0")
    x, gamma = ks_forward_array(u.as_array())
    return Point3(*map(float, x)), FiberAngle(float(gamma))


def ks_inverse(x: Point3, gamma: FiberAngle | float) -> Point4:
    """Section of the KS map: the point of R^4 over ``x`` at fiber angle ``gamma``.

    Off the public surface of the map; used to check round trips.
    """
    g = gamma.gamma if isinstance(gamma, FiberAngle) else float(gamma)
    r = x.r
    if r == 0:
        return Point4(0.0, 0.0, 0.0, 0.0)
    theta = math.atan2(math.hypot(x.x1, x.x2), x.x0)
    phi = float(_azimuth(x.x1, x.x2))
    s = math.sqrt(r)
    z1 = s * math.cos(0.5 * theta) * complex(math.cos(0.5 * (g - phi)), math.sin(0.5 * (g - phi)))
    z2 = s * math.sin(0.5 * theta) * complex(math.cos(0.5 * (g + phi)), math.sin(0.5 * (g + phi)))
    return Point4(z1.real, z1.imag, z2.real, z2.imag)


def fiber_action_array(u, delta):
    """Rotate ``(z1, z2)`` by ``exp(i delta / 2)``; vectorized over the last axis."""
    u = np.asarray(u, dtype=float)
    delta = np.asarray(delta, dtype=float)
    c, s = np.cos(0.5 * delta), np.sin(0.5 * delta)
    u0, u1, u2, u3 = u[..., 0], u[..., 1], u[..., 2], u[..., 3]
    return np.stack([c * u0 - s * u1, s * u0 + c * u1, c * u2 - s * u3, s * u2 + c * u3], axis=-1)


def fiber_action(u: Point4, delta: float) -> Point4:
    """Move ``u`` along its fiber by the angle ``delta``."""
    if all(c == 0 for c in u):
        raise DegenerateOriginError("fiber action needs u != 0")
    return Point4(*map(float, fiber_action_array(u.as_array(), delta)))


# ------------------------------------------------------- gauge potentials


def dirac_potential_array(x0, x1, x2):
    """Cartesian components ``(A0, A1, A2)`` of the unit Dirac potential.

    No singularity checks; accepts complex input for complex-step
    differentiation.
    """
    r = np.sqrt(x0 * x0 + x1 * x1 + x2 * x2)
    denom = r * (r + x0)
    return np.zeros_like(denom), -x2 / denom, x1 / denom


def gauge_potential_cartesian(x: Point3) -> np.ndarray:
    """Unit Dirac-monopole potential at ``x``, components ordered ``(x0, x1, x2)``.

    ``A = (0, -x2, x1) / (r (r + x0))``; the string is the negative
    ``x0`` half-axis.
    """
    r = x.r
    if r == 0:
        raise OriginSingularityError("potential undefined at the origin")
    if r + x.x0 <= STRING_TOL * r:
        raise StringSingularityError(f"{x} lies on the Dirac string")
    return np.array(dirac_potential_array(x.x0, x.x1, x.x2), dtype=float)


def gauge_potential_spherical(r: float, theta: float) -> float:
    """Azimuthal component ``(1 - cos theta) / (r sin theta) = tan(theta/2) / r``."""
    if r <= 0:
        raise OriginSingularityError("potential undefined at r = 0")
    if not 0 <= theta <= math.pi:
        raise InvalidParameterError(f"theta must lie in [0, pi], got {theta!r}")
    if 1.0 + math.cos(theta) <= STRING_TOL:
        raise StringSingularityError(f"theta = {theta!r} lies on the Dirac string")
    return math.tan(0.5 * theta) / r


def gauge_potential_parabolic(xi: float, eta: float, convention: str = "consistent") -> float:
    """Azimuthal component of the potential in parabolic coordinates.

    ``'consistent'`` returns ``2 sqrt(xi) / (sqrt(eta) (xi + eta))``, the
    same physical field as the Cartesian and spherical forms. ``'printed'``
    returns ``2 sqrt(xi) / sqrt(eta (eta + xi))``, kept for comparison.
    """
    if xi < 0 or eta < 0:
        raise InvalidParameterError("parabolic coordinates must be nonnegative")
    if xi + eta == 0:
        raise OriginSingularityError("potential undefined at the origin")
    if eta <= STRING_TOL * (xi + eta):
        raise StringSingularityError("eta = 0 lies on the Dirac string")
    if convention == "consistent":
        return 2.0 * math.sqrt(xi) / (math.sqrt(eta) * (xi + eta))
    if convention == "printed":
        return 2.0 * math.sqrt(xi) / math.sqrt(eta * (eta + xi))
    raise InvalidParameterError(f"unknown convention {convention!r}")


# ------------------------------------------------------ coordinate charts


def to_hyperspherical(x: Point3) -> HypersphericalPoint:
    r = x.r
    if r == 0:
        raise DegenerateOriginError("angles undefined at the origin")
    theta = math.atan2(math.hypot(x.x1, x.x2), x.x0)
    return HypersphericalPoint(r, theta, float(_azimuth(x.x1, x.x2)))


def from_hyperspherical(p: HypersphericalPoint) -> Point3:
    st = math.sin(p.theta)
    return Point3(p.r * math.cos(p.theta), p.r * st * math.cos(p.phi), p.r * st * math.sin(p.phi))


def to_parabolic(x: Point3) -> ParabolicPoint:
    r = x.r
    if r == 0:
        raise DegenerateOriginError("azimuth undefined at the origin")
    rho2 = x.x1 * x.x1 + x.x2 * x.x2
    # avoid cancellation in r - x0 (resp. r + x0) near the +x0 (resp. -x0) axis
    if x.x0 >= 0:
        eta = r + x.x0
        xi = rho2 / eta
    else:
        xi = r - x.x0
        eta = rho2 / xi
    phi = 2.0 * float(_azimuth(x.x1, x.x2))
    return ParabolicPoint(xi, eta, phi if phi < FOUR_PI else 0.0)


def from_parabolic(p: ParabolicPoint) -> Point3:
    s = math.sqrt(p.xi * p.eta)
    return Point3(0.5 * (p.eta - p.xi), s * math.cos(p.phi_half), s * math.sin(p.phi_half))


__all__ = [
    "FiberAngle",
    "HypersphericalPoint",
    "ParabolicPoint",
    "Point3",
    "Point4",
    "dirac_potential_array",
    "fiber_action",
    "fiber_action_array",
    "from_hyperspherical",
    "from_parabolic",
    "gauge_potential_cartesian",
    "gauge_potential_parabolic",
    "gauge_potential_spherical",
    "ks_forward",
    "ks_forward_array",
    "ks_inverse",
    "to_hyperspherical",
    "to_parabolic",
]
