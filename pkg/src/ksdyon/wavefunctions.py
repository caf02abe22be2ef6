"""Closed-form bound-state eigenfunctions and their normalization.

Radial factor ``R = rho^((k-1)/2) exp(-rho/2) L_n^k(rho)`` with
``rho = 2 kappa r``. Angular factor, in the default ``'half-angle'``
convention::

    Z = (1 - cos)^(|p|/2) (1 + cos)^(|p-2m|/2) 2F1(-n_theta, n_theta + |p| + |p-2m| + 1; |p| + 1; (1 - cos)/2)

(branch ``'eq37'`` is the same polynomial expanded about the other pole).
The ``'printed'`` convention keeps the ``(cos theta)^(m-p-1)`` style
prefactors and fails the angular equation; it is retained so the residual
test can tell the two apart.

Parabolic factors, default ``'printed'`` convention::

    N = (kappa xi)^|p| exp(-kappa xi / 2) 1F1(-m1; 2|p| + 1; kappa xi)
    Q = (kappa eta)^|p-m| exp(-kappa eta / 2) 1F1(-m2; 2|p-m| + 1; kappa eta)

The ``'half-exponent'`` convention uses ``|p|/2`` powers and ``|p| + 1``
denominators.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from typing import Optional, Union

import numpy as np

from .errors import InvalidParameterError, InvalidQuantumNumbersError, PoleDivergenceError
from .special import gauss_2f1_terminating, kummer_1f1_terminating, laguerre, quadrature
from .spectra import QuantumNumbersHS, QuantumNumbersPar, k_param
from .units import PhysicalContext, default_context

ANGULAR_CONVENTIONS = ("half-angle", "printed")
PARABOLIC_CONVENTIONS = ("printed", "half-exponent")
BRANCHES = ("eq36", "eq37")
DEFAULT_ANGULAR_CONVENTION = "half-angle"
DEFAULT_PARABOLIC_CONVENTION = "printed"
NORM_ORDER = 64

_POLE_PROBE = 1e-6


def _bound_kappa(n, k, ctx):
    return ctx.coupling / (n + 0.5 * (k + 1))


@dataclasses.dataclass(frozen=True)
class RadialState:
    """Radial factor with ``n`` nodes and index ``k`` at inverse length ``kappa``."""

    n: int
    k: float
    kappa: float
    norm: float = 1.0

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidQuantumNumbersError("n must be a nonnegative integer")
        if not self.k > 0:
            raise InvalidQuantumNumbersError("k must be positive")
        if not self.kappa > 0:
            raise InvalidParameterError("kappa must be positive")

    @classmethod
    def bound(cls, n: int, k: float, ctx: Optional[PhysicalContext] = None) -> "RadialState":
        """State whose ``kappa`` satisfies the Coulomb quantization condition."""
        return cls(n, k, _bound_kappa(n, k, ctx or default_context()))

    def energy(self, ctx: Optional[PhysicalContext] = None) -> float:
        ctx = ctx or default_context()
        return -(ctx.hbar * self.kappa) ** 2 / (2.0 * ctx.M)


@dataclasses.dataclass(frozen=True)
class AngularState:
    """Angular factor ``Z(theta)``.

    Construction probes both poles and raises :class:`PoleDivergenceError`
    if the factor is not finite there, unless ``check_regular`` is off.
    """

    n_theta: int
    p: int
    m: int
    branch: str = "eq36"
    convention: str = DEFAULT_ANGULAR_CONVENTION
    norm: float = 1.0
    check_regular: bool = dataclasses.field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.n_theta, (int, np.integer)) or self.n_theta < 0:
            raise InvalidQuantumNumbersError("n_theta must be a nonnegative integer")
        if self.branch not in BRANCHES:
            raise InvalidParameterError(f"branch must be one of {BRANCHES}")
        if self.convention not in ANGULAR_CONVENTIONS:
            raise InvalidParameterError(f"convention must be one of {ANGULAR_CONVENTIONS}")
        if self.check_regular:
            probe = np.array([_POLE_PROBE, math.pi - _POLE_PROBE])
            try:
                vals = _angular_raw(self, probe)
            except InvalidParameterError as exc:
                raise PoleDivergenceError(str(exc)) from exc
            if not np.all(np.isfinite(vals)):
                raise PoleDivergenceError(
                    f"branch {self.branch} ({self.convention}) is singular at a pole for p={self.p}, m={self.m}"
                )

    @property
    def separation_constant(self) -> float:
        """``lambda(lambda+1) = j(j+1) - m^2`` with ``j = max(|p-m|, |m|) + n_theta``."""
        j = self.j
        return j * (j + 1) - self.m * self.m

    @property
    def j(self) -> float:
        return max(abs(self.p - self.m), abs(self.m)) + self.n_theta

    @property
    def lam(self) -> float:
        return 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * self.separation_constant))

    @property
    def k(self) -> float:
        return k_param(self.m, self.lam)


@dataclasses.dataclass(frozen=True)
class HypersphericalState:
    radial: RadialState
    angular: AngularState

    @property
    def p(self) -> int:
        return self.angular.p

    @property
    def m(self) -> int:
        return self.angular.m

    @classmethod
    def from_quantum_numbers(cls, qn: QuantumNumbersHS, ctx: Optional[PhysicalContext] = None,
                             convention: str = DEFAULT_ANGULAR_CONVENTION) -> "HypersphericalState":
        ang = AngularState(qn.n_theta, qn.p, qn.m, convention=convention)
        if abs(ang.separation_constant - qn.lam * (qn.lam + 1)) > 1e-6 * max(1.0, ang.separation_constant):
            raise InvalidQuantumNumbersError(
                f"lambda={qn.lam} does not match n_theta={qn.n_theta}, p={qn.p}, m={qn.m}"
            )
        return cls(RadialState.bound(qn.n, qn.k, ctx), ang)


@dataclasses.dataclass(frozen=True)
class ParabolicState:
    """Parabolic factors ``N(xi) Q(eta)`` at inverse length ``kappa``."""

    p: float
    m: int
    m1: int
    m2: int
    kappa: float
    convention: str = DEFAULT_PARABOLIC_CONVENTION
    norm: float = 1.0

    def __post_init__(self):
        QuantumNumbersPar(self.p, self.m, self.m1, self.m2)
        if not self.kappa > 0:
            raise InvalidParameterError("kappa must be positive")
        if self.convention not in PARABOLIC_CONVENTIONS:
            raise InvalidParameterError(f"convention must be one of {PARABOLIC_CONVENTIONS}")

    @property
    def qn(self) -> QuantumNumbersPar:
        return QuantumNumbersPar(self.p, self.m, self.m1, self.m2)

    @classmethod
    def bound(cls, qn: QuantumNumbersPar, ctx: Optional[PhysicalContext] = None,
              convention: str = DEFAULT_PARABOLIC_CONVENTION) -> "ParabolicState":
        ctx = ctx or default_context()
        return cls(qn.p, qn.m, qn.m1, qn.m2, ctx.coupling / qn.denominator, convention)

    def energy(self, ctx: Optional[PhysicalContext] = None) -> float:
        ctx = ctx or default_context()
        return -(ctx.hbar * self.kappa) ** 2 / (2.0 * ctx.M)

    def exponents(self) -> tuple[float, float]:
        """Powers of ``kappa xi`` and ``kappa eta`` in the prefactors."""
        a, b = abs(self.p), abs(self.p - self.m)
        if self.convention == "half-exponent":
            return 0.5 * a, 0.5 * b
        return a, b


State = Union[RadialState, AngularState, HypersphericalState, ParabolicState]


# ------------------------------------------------------------ evaluation


def radial_eval(state: RadialState, r):
    """``rho^((k-1)/2) exp(-rho/2) L_n^k(rho)`` at ``rho = 2 kappa r``, times ``state.norm``."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise InvalidParameterError("r must be nonnegative")
    rho = 2.0 * state.kappa * r_arr
    out = state.norm * rho ** (0.5 * (state.k - 1)) * np.exp(-0.5 * rho) * laguerre(state.n, state.k, rho)
    return float(out) if np.ndim(out) == 0 else out


def _angular_raw(state: AngularState, theta):
    theta = np.asarray(theta, dtype=float)
    n, p, m = state.n_theta, state.p, state.m
    half_s = np.sin(0.5 * theta)
    half_c = np.cos(0.5 * theta)
    one_minus = 2.0 * half_s * half_s
    one_plus = 2.0 * half_c * half_c
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if state.convention == "half-angle":
            a, b = abs(p), abs(p - 2 * m)
            pref = one_minus ** (0.5 * a) * one_plus ** (0.5 * b)
            if state.branch == "eq36":
                poly = gauss_2f1_terminating(n, n + a + b + 1, a + 1, 0.5 * one_minus)
            else:
                poly = gauss_2f1_terminating(n, n + a + b + 1, b + 1, 0.5 * one_plus)
            return pref * poly
        cos_t = np.cos(theta)
        if state.branch == "eq36":
            pref = cos_t ** float(m - p - 1) * one_minus ** (0.5 * p)
            poly = gauss_2f1_terminating(n, n - p + 2 * m - 1, p + 1, 0.5 * one_minus)
        else:
            pref = cos_t ** (0.5 * (-2 * m - p)) * one_minus ** (0.5 * p)
            poly = gauss_2f1_terminating(n, n - 2 * m - 1, p + 1, 0.5 * one_minus)
        return pref * poly


def angular_eval(state: AngularState, theta):
    """Angular factor at ``theta`` in ``[0, pi]``, times ``state.norm``.

    Raises
    ------
    PoleDivergenceError
        Where the selected branch is not finite.
    """
    th = np.asarray(theta, dtype=float)
    if np.any((th < 0) | (th > math.pi)):
        raise InvalidParameterError("theta must lie in [0, pi]")
    try:
        out = state.norm * _angular_raw(state, th)
    except InvalidParameterError as exc:
        raise PoleDivergenceError(str(exc)) from exc
    if not np.all(np.isfinite(out)):
        raise PoleDivergenceError(
            f"angular factor ({state.branch}, {state.convention}) is not finite for p={state.p}, m={state.m}"
        )
    return float(out) if np.ndim(out) == 0 else out


def parabolic_factor(state: ParabolicState, which: str, x):
    """One parabolic factor: ``N(x)`` for ``which='xi'``, ``Q(x)`` for ``'eta'``."""
    t = state.kappa * np.asarray(x, dtype=float)
    if np.any(t < 0):
        raise InvalidParameterError("xi and eta must be nonnegative")
    if which == "xi":
        label, nodes, power = abs(state.p), state.m1, state.exponents()[0]
    elif which == "eta":
        label, nodes, power = abs(state.p - state.m), state.m2, state.exponents()[1]
    else:
        raise InvalidParameterError("which must be 'xi' or 'eta'")
    c = label + 1 if state.convention == "half-exponent" else 2 * label + 1
    return t**power * np.exp(-0.5 * t) * kummer_1f1_terminating(-nodes, c, t)


def parabolic_factors(state: ParabolicState, xi, eta):
    """``(N(xi), Q(eta))`` separately, without ``state.norm``."""
    return parabolic_factor(state, "xi", xi), parabolic_factor(state, "eta", eta)


def parabolic_eval(state: ParabolicState, xi, eta):
    """``N(xi) Q(eta)`` times ``state.norm``."""
    N, Q = parabolic_factors(state, xi, eta)
    out = state.norm * N * Q
    return float(out) if np.ndim(out) == 0 else out


def assemble_psi_hyperspherical(state: Union[HypersphericalState, QuantumNumbersHS], gamma, r, theta, phi,
                                ctx: Optional[PhysicalContext] = None):
    """``exp(i m gamma) exp(i p phi) R(r) Z(theta)``."""
    if isinstance(state, QuantumNumbersHS):
        state = HypersphericalState.from_quantum_numbers(state, ctx)
    phase = np.exp(1j * (state.m * np.asarray(gamma, dtype=float) + state.p * np.asarray(phi, dtype=float)))
    return phase * radial_eval(state.radial, r) * angular_eval(state.angular, theta)


def assemble_psi_parabolic(state: Union[ParabolicState, QuantumNumbersPar], gamma, xi, eta, phi,
                           ctx: Optional[PhysicalContext] = None):
    """``exp(i m gamma) exp(i p phi) N(xi) Q(eta)`` with ``phi`` in ``[0, 4 pi)``."""
    if isinstance(state, QuantumNumbersPar):
        state = ParabolicState.bound(state, ctx)
    phase = np.exp(1j * (state.m * np.asarray(gamma, dtype=float) + state.p * np.asarray(phi, dtype=float)))
    return phase * parabolic_eval(state, xi, eta)


# --------------------------------------------------------- normalization


def _radial_norm2(state: RadialState, order: int) -> float:
    rule = quadrature("laguerre", order, alpha=state.k + 1)
    integral = rule.integrate(lambda rho: laguerre(state.n, state.k, rho) ** 2)
    return integral / (2.0 * state.kappa) ** 3


def _angular_norm2(state: AngularState, order: int) -> float:
    rule = quadrature("legendre", order)
    vals = _angular_raw(state, np.arccos(rule.nodes))
    return 2.0 * math.pi * float(np.dot(rule.weights, vals * vals))


def _parabolic_norm2(state: ParabolicState, order: int) -> float:
    e1, e2 = state.exponents()
    c1 = (abs(state.p) + 1) if state.convention == "half-exponent" else 2 * abs(state.p) + 1
    c2 = (abs(state.p - state.m) + 1) if state.convention == "half-exponent" else 2 * abs(state.p - state.m) + 1

    def moment(exp, c, nodes_count, shift):
        rule = quadrature("laguerre", order, alpha=2 * exp + shift)
        return rule.integrate(lambda t: kummer_1f1_terminating(-nodes_count, c, t) ** 2)

    n0, n1 = moment(e1, c1, state.m1, 0), moment(e1, c1, state.m1, 1)
    q0, q1 = moment(e2, c2, state.m2, 0), moment(e2, c2, state.m2, 1)
    # (xi + eta)/4 dxi deta dphi_geo in units of kappa
    return 2.0 * math.pi * (n1 * q0 + n0 * q1) / (4.0 * state.kappa**3)


def _checked(fn, state, order):
    a = fn(state, order)
    b = fn(state, 2 * order)
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0 or abs(a - b) > 1e-8 * abs(b):
        raise PoleDivergenceError(f"norm integral of {type(state).__name__} does not converge")
    return b


@functools.singledispatch
def normalize(state, order: int = NORM_ORDER):
    """Return ``(normalized_state, constant)`` with unit norm under the natural measure.

    Measures: ``r^2 dr`` (radial), ``sin dtheta dphi`` (angular),
    ``r^2 sin dr dtheta dphi`` (hyperspherical) and
    ``(xi + eta)/4 dxi deta dphi`` (parabolic, geometric azimuth).

    Raises
    ------
    PoleDivergenceError
        If the norm integral diverges.
    """
    raise TypeError(f"cannot normalize {type(state).__name__}")


@normalize.register
def _(state: RadialState, order: int = NORM_ORDER):
    c = state.norm / math.sqrt(state.norm**2 * _checked(_radial_norm2, state, order))
    return dataclasses.replace(state, norm=c), c / state.norm


@normalize.register
def _(state: AngularState, order: int = NORM_ORDER):
    c = state.norm / math.sqrt(state.norm**2 * _checked(_angular_norm2, state, order))
    return dataclasses.replace(state, norm=c), c / state.norm


@normalize.register
def _(state: HypersphericalState, order: int = NORM_ORDER):
    rad, c1 = normalize(state.radial, order)
    ang, c2 = normalize(state.angular, order)
    return HypersphericalState(rad, ang), c1 * c2


@normalize.register
def _(state: ParabolicState, order: int = NORM_ORDER):
    c = state.norm / math.sqrt(state.norm**2 * _checked(_parabolic_norm2, state, order))
    return dataclasses.replace(state, norm=c), c / state.norm


def radial_overlap(a: RadialState, b: RadialState, order: int = 96) -> float:
    """``int R_a R_b r^2 dr`` by Gauss-Laguerre in ``rho = (kappa_a + kappa_b) r``."""
    s = a.kappa + b.kappa
    rule = quadrature("laguerre", order, alpha=2.0)
    rho = rule.nodes
    r = rho / s
    # the Laguerre weight already carries exp(-rho); undo it on the integrand
    f = radial_eval(a, r) * radial_eval(b, r) * np.exp(rho)
    return float(np.dot(rule.weights, f)) / s**3


def admissible_branches(p: int, m: int, n_theta: int = 0, convention: str = DEFAULT_ANGULAR_CONVENTION) -> list:
    """Branches whose angular factor is regular and normalizable."""
    out = []
    for branch in BRANCHES:
        try:
            st = AngularState(n_theta, p, m, branch, convention)
            normalize(st)
        except PoleDivergenceError:
            continue
        out.append(branch)
    return out


__all__ = [
    "ANGULAR_CONVENTIONS",
    "AngularState",
    "BRANCHES",
    "DEFAULT_ANGULAR_CONVENTION",
    "DEFAULT_PARABOLIC_CONVENTION",
    "HypersphericalState",
    "PARABOLIC_CONVENTIONS",
    "ParabolicState",
    "RadialState",
    "admissible_branches",
    "angular_eval",
    "assemble_psi_hyperspherical",
    "assemble_psi_parabolic",
    "normalize",
    "parabolic_eval",
    "parabolic_factor",
    "parabolic_factors",
    "radial_eval",
    "radial_overlap",
]
