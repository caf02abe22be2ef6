"""Quantum numbers, closed-form energy levels and their degeneracies.

Hyperspherical levels ``eps = -M e^4 / (2 hbar^2 (n + (k+1)/2)^2)`` with
``k = sqrt((2 lambda + 1)^2 + 4 m^2)``. Parabolic levels
``eps = -M e^4 / (2 hbar^2 d^2)`` with
``d = m1 + m2 + |p| + |p - m| + 1``, where ``p`` is the parabolic azimuthal
label (half-integer allowed because the parabolic azimuth runs over
``[0, 4 pi)``).

A level is indexed by its principal number ``N = 2n + k + 1 = 2d``.
"""
from __future__ import annotations

import dataclasses
import functools
import math
import numbers
from typing import Optional

from .errors import InvalidParameterError, InvalidQuantumNumbersError
from .numerics import Grid1D, separation_label, solve_angular
from .units import PhysicalContext, default_context

COORDS = ("hyperspherical", "parabolic")


def _is_int(v) -> bool:
    return not isinstance(v, bool) and isinstance(v, numbers.Integral)


def _is_half_int(v) -> bool:
    try:
        twice = 2 * float(v)
    except (TypeError, ValueError):
        return False
    return math.isfinite(twice) and twice == round(twice)


def k_roots(m, lambda_sep) -> tuple[float, float]:
    """Both roots ``+-sqrt((2 lambda + 1)^2 + 4 m^2)`` of the radial index.

    Raises
    ------
    InvalidQuantumNumbersError
        If the discriminant is negative.
    """
    disc = 4.0 * lambda_sep * (lambda_sep + 1) + 1.0 + 4.0 * m * m
    if disc < 0:
        raise InvalidQuantumNumbersError(
            f"negative discriminant {disc} for m={m}, lambda={lambda_sep}"
        )
    k = math.sqrt(disc)
    return k, -k


def k_param(m, lambda_sep) -> float:
    """Nonnegative radial index ``k = sqrt((2 lambda + 1)^2 + 4 m^2)``."""
    return k_roots(m, lambda_sep)[0]


@dataclasses.dataclass(frozen=True)
class QuantumNumbersHS:
    """Hyperspherical labels.

    ``n`` counts radial nodes, ``n_theta`` angular nodes; ``lam`` is the
    separation label with constant ``lam (lam + 1)``.
    """

    n: int
    lam: float
    p: int
    m: int
    n_theta: int = 0

    def __post_init__(self):
        for name in ("n", "n_theta"):
            v = getattr(self, name)
            if not _is_int(v) or v < 0:
                raise InvalidQuantumNumbersError(f"{name} must be a nonnegative integer, got {v!r}")
        for name in ("p", "m"):
            if not _is_int(getattr(self, name)):
                raise InvalidQuantumNumbersError(f"{name} must be an integer")
        if not math.isfinite(self.lam) or self.lam * (self.lam + 1) < 0:
            raise InvalidQuantumNumbersError("lambda(lambda+1) must be nonnegative")

    @property
    def k(self) -> float:
        return k_param(self.m, self.lam)

    @property
    def principal(self) -> float:
        return 2 * self.n + self.k + 1

    @classmethod
    def from_j(cls, n: int, j: float, p: int, m: int, n_theta: int = 0) -> "QuantumNumbersHS":
        """Labels with ``lambda(lambda+1) = j(j+1) - m^2``."""
        return cls(n, float(separation_label(j * (j + 1) - m * m)), p, m, n_theta)


@dataclasses.dataclass(frozen=True)
class QuantumNumbersPar:
    """Parabolic labels ``(p, m, m1, m2)``.

    ``p`` is an integer or half-integer of either sign; ``m1`` and ``m2``
    count nodes in ``xi`` and ``eta``.
    """

    p: float
    m: int
    m1: int
    m2: int

    def __post_init__(self):
        if not _is_half_int(self.p):
            raise InvalidQuantumNumbersError(f"p must be an integer or half-integer, got {self.p!r}")
        if not _is_int(self.m):
            raise InvalidQuantumNumbersError("m must be an integer")
        for name in ("m1", "m2"):
            v = getattr(self, name)
            if not _is_int(v) or v < 0:
                raise InvalidQuantumNumbersError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def alpha1(self) -> float:
        """Separation constant of the ``xi`` equation in the variable ``kappa xi``."""
        return -(self.m1 + abs(self.p) + 0.5)

    @property
    def alpha2(self) -> float:
        return -(self.m2 + abs(self.p - self.m) + 0.5)

    @property
    def denominator(self) -> float:
        """``d`` in ``eps = -M e^4 / (2 hbar^2 d^2)``; equals ``-(alpha1 + alpha2)``."""
        return self.m1 + self.m2 + abs(self.p) + abs(self.p - self.m) + 1

    @property
    def in_printed_domain(self) -> bool:
        """Whether ``p >= max(0, m)``, where ``d = 2p - m + m1 + m2 + 1``."""
        return self.p >= 0 and self.p >= self.m


@dataclasses.dataclass(frozen=True)
class EnergyLevel:
    """One energy eigenvalue with the labels that produced it."""

    epsilon: float
    principal: float
    source: str
    qn: Optional[object] = None
    extra: dict = dataclasses.field(default_factory=dict)

    def to_row(self) -> dict:
        row = {"epsilon": self.epsilon, "N": self.principal}
        q = self.qn
        row["n"] = getattr(q, "n", None)
        row["k"] = q.k if isinstance(q, QuantumNumbersHS) else None
        row["lambda"] = getattr(q, "lam", None)
        row["p"] = getattr(q, "p", None)
        row["m"] = getattr(q, "m", None)
        row["m1"] = getattr(q, "m1", None)
        row["m2"] = getattr(q, "m2", None)
        return row


def energy_from_principal(N: float, ctx: Optional[PhysicalContext] = None) -> float:
    """``-2 M e^4 / (hbar^2 N^2)``."""
    ctx = ctx or default_context()
    if not N > 0:
        raise InvalidQuantumNumbersError("principal number must be positive")
    return -2.0 * ctx.energy_unit / (N * N)


def energy_hyperspherical(n: int, k: float, ctx: Optional[PhysicalContext] = None,
                          qn: Optional[QuantumNumbersHS] = None) -> EnergyLevel:
    """``eps = -M e^4 / (2 hbar^2 (n + (k+1)/2)^2)``."""
    ctx = ctx or default_context()
    if not _is_int(n) or n < 0:
        raise InvalidQuantumNumbersError(f"n must be a nonnegative integer, got {n!r}")
    if not k >= 0:
        raise InvalidQuantumNumbersError(f"k must be nonnegative, got {k!r}")
    nu = n + 0.5 * (k + 1)
    return EnergyLevel(-0.5 * ctx.energy_unit / (nu * nu), 2 * n + k + 1, "hyperspherical", qn)


def energy_parabolic(qn: QuantumNumbersPar, ctx: Optional[PhysicalContext] = None,
                     strict: bool = False) -> EnergyLevel:
    """``eps = -M e^4 / (2 hbar^2 d^2)``.

    Parameters
    ----------
    strict : bool
        Reject labels outside ``p >= max(0, m)``, the range on which
        ``d = 2p - m + m1 + m2 + 1``.
    """
    ctx = ctx or default_context()
    if strict and not qn.in_printed_domain:
        raise InvalidQuantumNumbersError(f"p={qn.p} lies outside p >= max(0, m={qn.m})")
    d = qn.denominator
    principal = int(2 * d) if 2 * d == int(2 * d) else 2 * d
    return EnergyLevel(-0.5 * ctx.energy_unit / (d * d), principal, "parabolic", qn)


def separation_constants(qn: QuantumNumbersPar, kappa: Optional[float] = None) -> tuple[float, float]:
    """``(alpha1, alpha2)``; scaled by ``kappa`` when it is given."""
    s = 1.0 if kappa is None else kappa
    return s * qn.alpha1, s * qn.alpha2


def duality_map(ctx: PhysicalContext, N_osc: int) -> EnergyLevel:
    """Monopole-side level dual to oscillator level ``N_osc``.

    The oscillator energy ``E = hbar omega (N_osc + 2)`` becomes the
    coupling ``e^2 = E / 4`` and ``omega`` fixes the energy
    ``eps = -M omega^2 / 8``.
    """
    if not _is_int(N_osc) or N_osc < 0:
        raise InvalidQuantumNumbersError("N_osc must be a nonnegative integer")
    if ctx.omega is None and ctx.E_osc is None:
        raise InvalidParameterError("duality needs omega or E_osc in the context")
    if ctx.omega is not None:
        omega = ctx.omega
        energy = ctx.hbar * omega * (N_osc + 2)
    else:
        energy = ctx.E_osc
        omega = energy / (ctx.hbar * (N_osc + 2))
    eps = -ctx.M * omega * omega / 8.0
    return EnergyLevel(
        eps, N_osc + 2, "duality", None,
        {"N_osc": N_osc, "omega": omega, "E_osc": energy, "e2": energy / 4.0},
    )


def duality_energy(e2: float, N_mono: float, M: float = 1.0, hbar: float = 1.0) -> float:
    """``-M E^2 / (8 hbar^2 N^2)`` with ``E = 4 e^2``."""
    E = 4.0 * e2
    return -M * E * E / (8.0 * hbar * hbar * N_mono * N_mono)


# ------------------------------------------------------------ enumeration

ANGULAR_CELLS = 512


@functools.lru_cache(maxsize=512)
def _angular_ladder(p: int, m: int, count: int, cells: int) -> tuple:
    res = solve_angular(p, m, Grid1D(-1.0, 1.0, cells, "angular-interval"), n_levels=count)
    return tuple(float(v) for v in res.eigenvalues)


def _j_floor(p, m):
    return max(abs(p - m), abs(m))


def enumerate_level(energy_index: int, coords: str, m: int,
                    ctx: Optional[PhysicalContext] = None) -> list:
    """All label tuples of one level at fixed ``m``.

    ``energy_index`` is the integer ``d >= |m| + 1`` with principal number
    ``N = 2d``. Hyperspherical tuples ``(n, k, lambda, p, m, n_theta)`` use
    separation constants from the numerical angular solver, so the count is
    independent of the closed forms. Parabolic tuples are
    ``(p, m, m1, m2)``.
    """
    if coords not in COORDS:
        raise InvalidParameterError(f"coords must be one of {COORDS}")
    if not _is_int(energy_index) or not _is_int(m):
        raise InvalidQuantumNumbersError("energy index and m must be integers")
    if energy_index < abs(m) + 1:
        return []
    if coords == "parabolic":
        return _enumerate_parabolic(energy_index, m)
    return _enumerate_hyperspherical(energy_index, m)


def _enumerate_parabolic(d, m):
    out = []
    # |p| + |p - m| >= |m| bounds p to |p| <= d + |m|
    twice = range(-2 * (d + abs(m)), 2 * (d + abs(m)) + 1)
    for tp in twice:
        p = tp / 2
        base = abs(p) + abs(p - m) + 1
        rest = d - base
        if rest < 0 or rest != int(rest):
            continue
        p_label = int(p) if p == int(p) else p
        for m1 in range(int(rest) + 1):
            out.append((p_label, m, m1, int(rest) - m1))
    return out


def _enumerate_hyperspherical(d, m):
    """Scan ``p`` outward from ``m`` (where ``j_min = |m|`` is smallest)."""
    out = []
    target = 2 * d
    for side in (0, 1):
        step = 1 if side == 0 else -1
        p = m if side == 0 else m - 1
        while True:
            # ground value j_min = max(|p - m|, |m|) only grows away from p = m
            if 2 * _j_floor(p, m) + 2 > target:
                break
            count = d - _j_floor(p, m)
            ladder = _angular_ladder(p, m, count, ANGULAR_CELLS)
            for n_theta, constant in enumerate(ladder):
                # round-off can push an exact zero constant slightly negative
                constant = max(constant, 0.0)
                k = k_param(m, float(separation_label(constant)))
                rem = (target - 1 - k) / 2
                n = round(rem)
                if n >= 0 and abs(rem - n) < 1e-6:
                    out.append((n, k, float(separation_label(constant)), p, m, n_theta))
            p += step
    out.sort(key=lambda t: (t[3], t[5]))
    return out


def degeneracy(energy_index: int, coords: str, m: int) -> int:
    return len(enumerate_level(energy_index, coords, m))


def spectrum(coords: str, m: int, depth: int, ctx: Optional[PhysicalContext] = None) -> list:
    """Energies for the first ``depth`` levels at fixed ``m``.

    Returns a list of :class:`EnergyLevel`, one per label tuple, with the
    level degeneracy in ``extra['degeneracy']``.
    """
    ctx = ctx or default_context()
    if not _is_int(depth) or depth < 1:
        raise InvalidParameterError("depth must be a positive integer")
    rows = []
    for d in range(abs(m) + 1, abs(m) + 1 + depth):
        tuples = enumerate_level(d, coords, m, ctx)
        for t in tuples:
            if coords == "parabolic":
                qn = QuantumNumbersPar(*t)
                lvl = energy_parabolic(qn, ctx)
            else:
                n, k, lam, p, mm, n_theta = t
                qn = QuantumNumbersHS(n, lam, p, mm, n_theta)
                lvl = energy_hyperspherical(n, k, ctx, qn)
            rows.append(dataclasses.replace(lvl, extra={"degeneracy": len(tuples), "index": d}))
    return rows


def closed_form_degeneracy(d: int, m: int) -> int:
    """``d^2 - m^2`` for ``d >= |m| + 1``."""
    return d * d - m * m if d >= abs(m) + 1 else 0


__all__ = [
    "COORDS",
    "EnergyLevel",
    "QuantumNumbersHS",
    "QuantumNumbersPar",
    "closed_form_degeneracy",
    "degeneracy",
    "duality_energy",
    "duality_map",
    "energy_from_principal",
    "energy_hyperspherical",
    "energy_parabolic",
    "enumerate_level",
    "k_param",
    "k_roots",
    "separation_constants",
    "spectrum",
]

