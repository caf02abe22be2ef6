"""Finite-difference Sturm-Liouville eigensolvers.

Each separated equation is written as ``-(P y')' + q y = mu W y`` after the
substitution ``chi = x**c * y`` (``c`` an indicial exponent read off the
singular coefficient of the equation), discretized with second-order
cell-centred differences, symmetrized by ``W**(1/2)`` and handed to the
Sturm-bisection kernel. Eigenvalues on three nested grids are combined by
Richardson extrapolation.

A singular endpoint where ``P W`` vanishes needs no boundary condition
(zero flux); a truncated semi-infinite end gets a Dirichlet ghost cell.
"""
from __future__ import annotations

import dataclasses
import math
from typing import Optional

import numpy as np

from .errors import GridResolutionError, InvalidParameterError
from .tridiag import lowest_eigenvalues
from .units import PhysicalContext, default_context

DOMAIN_KINDS = ("radial-semiline", "angular-interval", "parabolic-semiline", "oscillator-semiline")
MIN_CELLS = 64


@dataclasses.dataclass(frozen=True)
class Grid1D:
    """Uniform cell-centred grid on ``[a, b]``.

    Nodes sit at cell centres, so both endpoints are excluded by half a
    spacing.
    """

    a: float
    b: float
    n_cells: int
    kind: str

    def __post_init__(self):
        if self.kind not in DOMAIN_KINDS:
            raise InvalidParameterError(f"unknown domain kind {self.kind!r}")
        if not self.b > self.a:
            raise InvalidParameterError("grid needs b > a")
        if self.n_cells < MIN_CELLS:
            raise InvalidParameterError(f"grid needs at least {MIN_CELLS} cells, got {self.n_cells}")

    @property
    def spacing(self) -> float:
        return (self.b - self.a) / self.n_cells

    @property
    def points(self) -> np.ndarray:
        return self.a + (np.arange(self.n_cells) + 0.5) * self.spacing

    @property
    def faces(self) -> np.ndarray:
        return self.a + np.arange(self.n_cells + 1) * self.spacing

    def refined(self, factor: int = 2) -> "Grid1D":
        return dataclasses.replace(self, n_cells=self.n_cells * factor)


@dataclasses.dataclass(frozen=True)
class EigenResult:
    """Eigenvalues of one separated equation.

    ``eigenvalues`` holds the Richardson-extrapolated values, ``levels`` the
    raw values on each grid from coarse to fine.
    """

    eigenvalues: np.ndarray
    error_estimate: np.ndarray
    grid: Grid1D
    levels: tuple
    eigenvectors: Optional[np.ndarray] = None

    @property
    def richardson_estimate(self):
        return self.eigenvalues, self.error_estimate

    @property
    def finest(self) -> np.ndarray:
        return self.levels[-1]

    def convergence_ratios(self) -> np.ndarray:
        """Error-reduction ratio per halving, ``(E0 - E1) / (E1 - E2)``."""
        if len(self.levels) < 3:
            raise ValueError("need three grid levels")
        e0, e1, e2 = self.levels[-3:]
        return (e0 - e1) / (e1 - e2)


def _romberg_columns(levels, order):
    """Successive columns of the extrapolation table, last column first."""
    table = [np.asarray(v, dtype=float) for v in levels]
    columns = [table]
    power = order
    while len(table) > 1:
        factor = 2.0**power
        table = [(factor * table[i + 1] - table[i]) / (factor - 1) for i in range(len(table) - 1)]
        columns.append(table)
        power += 2
    return columns[::-1]


def richardson(levels, order: int = 2):
    """Romberg-style extrapolation of values computed at ``h, h/2, h/4, ...``.

    Assumes an error expansion in even powers starting at ``h**order``.
    Returns the extrapolated values and a positive error estimate, the gap
    between the best value and the finest entry of the previous column.
    """
    columns = _romberg_columns(levels, order)
    value = columns[0][0]
    if len(columns) == 1:
        return value, np.full_like(value, np.inf)
    second = columns[1][-1]
    eps = np.finfo(float).eps
    err = np.abs(value - second) + 16 * eps * np.maximum(np.abs(value), 1.0)
    return value, err


def _assemble(grid, p0, logw, q, left, right):
    """Symmetric tridiagonal ``(d, e)`` for ``-(p0 W y')' + q W y = mu W y``."""
    h = grid.spacing
    x = grid.points
    faces = grid.faces
    inner = faces[1:-1]
    lw = logw(x)
    lw_in = logw(inner)
    flux = p0(inner) / (h * h)
    diag = np.zeros(grid.n_cells)
    diag[:-1] += flux * np.exp(lw_in - lw[:-1])
    diag[1:] += flux * np.exp(lw_in - lw[1:])
    if left == "dirichlet":
        diag[0] += 2.0 * p0(faces[:1])[0] / (h * h) * math.exp(logw(faces[:1])[0] - lw[0])
    if right == "dirichlet":
        diag[-1] += 2.0 * p0(faces[-1:])[0] / (h * h) * math.exp(logw(faces[-1:])[0] - lw[-1])
    d = diag + q(x)
    e = -flux * np.exp(lw_in - 0.5 * (lw[:-1] + lw[1:]))
    return d, e


def _solve(grid, p0, logw, q, left, right, n_levels, refinements, tol, backend=None):
    grids = [grid]
    for _ in range(refinements):
        grids.append(grids[-1].refined())
    levels = []
    for g in grids:
        d, e = _assemble(g, p0, logw, q, left, right)
        levels.append(lowest_eigenvalues(d, e, n_levels, backend=backend))
    values, err = richardson(levels)
    if tol is not None and np.any(err > tol * np.maximum(np.abs(values), 1e-300)):
        raise GridResolutionError(
            f"Richardson error estimate {err.max():.3e} exceeds relative tolerance {tol:.1e}; "
            "refine the grid or extend the domain"
        )
    return EigenResult(values, err, grid, tuple(levels))


def _zero_log(x):
    return np.zeros_like(x)


# ------------------------------------------------------------ radial


def radial_exponent(m, lambda_sep) -> float:
    """Indicial exponent ``c`` of ``chi = r R`` at the origin: ``c (c - 1) = lambda(lambda+1) + m^2``."""
    centrifugal = lambda_sep * (lambda_sep + 1) + m * m
    if centrifugal < -0.25:
        raise InvalidParameterError("lambda(lambda+1) + m^2 must be >= -1/4")
    return 0.5 + math.sqrt(0.25 + centrifugal)


def default_radial_grid(m, lambda_sep, ctx=None, n_levels=3, n_cells=2048) -> Grid1D:
    """Radial grid long enough for ``n_levels`` Coulomb-like bound states.

    Uses the hydrogenic size estimate ``r ~ 10 nu^2`` Coulomb lengths with
    ``nu = c - 1 + n_levels``.
    """
    ctx = ctx or default_context()
    nu = radial_exponent(m, lambda_sep) - 1.0 + n_levels
    return Grid1D(0.0, ctx.length_unit * max(30.0, 10.0 * nu * nu), n_cells, "radial-semiline")


def solve_radial(m, lambda_sep, ctx: Optional[PhysicalContext] = None, grid: Optional[Grid1D] = None,
                 n_levels: int = 3, refinements: int = 2, tol: Optional[float] = None,
                 regularize: bool = True, backend=None) -> EigenResult:
    """Bound-state energies of the charge-dyon radial equation.

    ``-(1/2r^2)(r^2 R')' + [(lambda(lambda+1) + m^2)/(2r^2) - M e^2/(hbar^2 r)] R = (M eps / hbar^2) R``

    Parameters
    ----------
    m : int
        Fiber (monopole) number.
    lambda_sep : float
        Angular separation label; the separated constant is ``lambda(lambda+1)``.
    ctx : PhysicalContext, optional
    grid : Grid1D, optional
        Coarsest grid; refined ``refinements`` times by halving. Must reach
        at least 30 Coulomb lengths.
    n_levels : int
    tol : float, optional
        Relative tolerance on the Richardson error estimate; exceeded
        estimates raise :class:`GridResolutionError`.
    regularize : bool
        Factor out ``r**c`` near the origin. With ``False`` the plain
        Liouville form ``chi = r R`` with a Dirichlet wall at ``r = 0`` is
        used.

    Returns
    -------
    EigenResult
        Eigenvalues are energies ``eps`` in the units of ``ctx``.
    """
    ctx = ctx or default_context()
    grid = grid or default_radial_grid(m, lambda_sep, ctx, n_levels)
    if grid.kind != "radial-semiline" or grid.a != 0.0:
        raise InvalidParameterError("radial solve needs a radial-semiline grid starting at 0")
    a0 = ctx.length_unit
    if grid.b < 30.0 * a0 * (1 - 1e-12):
        raise InvalidParameterError(f"r_max = {grid.b} is shorter than 30 Coulomb lengths ({30 * a0})")
    scaled = Grid1D(0.0, grid.b / a0, grid.n_cells, grid.kind)
    centrifugal = lambda_sep * (lambda_sep + 1) + m * m
    c = radial_exponent(m, lambda_sep)
    if regularize:
        res = _solve(scaled, lambda r: 0.5 * np.ones_like(r), lambda r: 2.0 * c * np.log(r),
                     lambda r: -1.0 / r, "natural", "dirichlet", n_levels, refinements, None, backend)
    else:
        res = _solve(scaled, lambda r: 0.5 * np.ones_like(r), _zero_log,
                     lambda r: 0.5 * centrifugal / (r * r) - 1.0 / r,
                     "dirichlet", "dirichlet", n_levels, refinements, None, backend)
    unit = ctx.energy_unit
    out = EigenResult(res.eigenvalues * unit, res.error_estimate * unit, grid,
                      tuple(level * unit for level in res.levels))
    _check_tol(out, tol)
    return out


def _check_tol(result, tol):
    if tol is None:
        return
    scale = np.maximum(np.abs(result.eigenvalues), 1e-300)
    if np.any(result.error_estimate > tol * scale):
        raise GridResolutionError(
            f"Richardson error estimate {float((result.error_estimate / scale).max()):.3e} "
            f"exceeds relative tolerance {tol:.1e}"
        )


# ------------------------------------------------------------ angular


def angular_potential(p, m, x):
    """``p^2/sin^2 - 2mp/(1+cos) + m^2 (1-cos)/(1+cos)`` written in ``x = cos(theta)``."""
    return (p - m * (1.0 - x)) ** 2 / ((1.0 - x) * (1.0 + x))


def angular_exponents(p, m):
    """Half-exponents ``(alpha, beta)`` of ``Z ~ (1-x)^alpha (1+x)^beta`` at the poles.

    They follow from the endpoint residues of the angular potential:
    ``(1-x) V -> p^2/2`` at ``x = 1`` and ``(1+x) V -> (p-2m)^2/2`` at
    ``x = -1``, with ``2 alpha^2 = residue``.
    """
    return 0.5 * abs(p), 0.5 * abs(p - 2 * m)


def solve_angular(p, m, grid: Optional[Grid1D] = None, n_levels: int = 4, refinements: int = 2,
                  tol: Optional[float] = None, backend=None) -> EigenResult:
    """Separation constants ``lambda(lambda+1)`` of the monopole angular equation.

    ``-(1/sin)(sin Z')' + [p^2/sin^2 - 2mp/(1+cos) + m^2(1-cos)/(1+cos)] Z = lambda(lambda+1) Z``

    The grid lives in ``x = cos(theta)`` on ``[-1, 1]``; cell centres keep
    away from both poles.
    """
    grid = grid or Grid1D(-1.0, 1.0, 1024, "angular-interval")
    if grid.kind != "angular-interval" or (grid.a, grid.b) != (-1.0, 1.0):
        raise InvalidParameterError("angular solve needs an angular-interval grid on [-1, 1]")
    al, be = angular_exponents(p, m)

    def q(x):
        return (angular_potential(p, m, x) - al * al * (1 + x) / (1 - x) - be * be * (1 - x) / (1 + x)
                + 2 * al * be + al + be)

    def logw(x):
        out = np.zeros_like(x)
        if al:
            out = out + 2 * al * np.log1p(-x)
        if be:
            out = out + 2 * be * np.log1p(x)
        return out

    return _solve(grid, lambda x: (1 - x) * (1 + x), logw, q, "natural", "natural",
                  n_levels, refinements, tol, backend)


def separation_label(constant) -> np.ndarray:
    """Positive root ``lambda`` of ``lambda (lambda + 1) = constant``."""
    constant = np.asarray(constant, dtype=float)
    return 0.5 * (-1.0 + np.sqrt(1.0 + 4.0 * constant))


# ---------------------------------------------------------- parabolic


def _parabolic_scaled(label, n_levels, n_cells, refinements, backend):
    c = abs(label)
    t_max = 40.0 + 4.0 * (c + n_levels)
    grid = Grid1D(0.0, t_max, n_cells, "parabolic-semiline")
    logw = (lambda t: 2.0 * c * np.log(t)) if c else _zero_log
    return _solve(grid, lambda t: t, logw, lambda t: 0.25 * t, "natural", "dirichlet",
                  n_levels, refinements, None, backend)


@dataclasses.dataclass(frozen=True)
class ParabolicSeparation:
    """Separation constants of the two parabolic equations.

    ``alpha1``/``alpha2`` are in the dimensionless variable ``kappa * xi``
    (resp. ``kappa * eta``) and ordered by node count; multiply by
    ``kappa`` for the constants of the equations in physical variables.
    """

    p: float
    m: int
    alpha1: np.ndarray
    alpha2: np.ndarray
    xi: EigenResult
    eta: EigenResult
    kappa: Optional[float] = None

    @property
    def alpha1_physical(self) -> np.ndarray:
        return self.kappa * self.alpha1

    @property
    def alpha2_physical(self) -> np.ndarray:
        return self.kappa * self.alpha2

    def bound_energies(self, ctx: Optional[PhysicalContext] = None) -> dict:
        """Energies at which ``kappa (alpha1 + alpha2) = -M e^2 / hbar^2``.

        Keys are ``(m1, m2)`` node counts.
        """
        ctx = ctx or default_context()
        out = {}
        for i, a1 in enumerate(self.alpha1):
            for j, a2 in enumerate(self.alpha2):
                kappa = ctx.coupling / (-(a1 + a2))
                out[(i, j)] = -(ctx.hbar * kappa) ** 2 / (2.0 * ctx.M)
        return out


def solve_parabolic(p, m, ctx: Optional[PhysicalContext] = None, energy: Optional[float] = None,
                    n_levels: int = 4, n_cells: int = 1024, refinements: int = 2,
                    backend=None) -> ParabolicSeparation:
    """Separation constants of the xi and eta equations at fixed energy.

    ``(1/N)(xi N')' - p^2/xi + (M eps / 2 hbar^2) xi = alpha1`` and the eta
    equation with ``(p - m)^2``.

    Parameters
    ----------
    p : float
        Parabolic azimuthal label (integer or half-integer).
    m : int
    energy : float, optional
        Bound-state energy ``eps < 0``; sets ``kappa = sqrt(-2 M eps)/hbar``.
    """
    ctx = ctx or default_context()
    if float(2 * p) != round(2 * p):
        raise InvalidParameterError(f"p must be an integer or half-integer, got {p!r}")
    kappa = None
    if energy is not None:
        if not energy < 0:
            raise InvalidParameterError("bound-state energy must be negative")
        kappa = math.sqrt(-2.0 * ctx.M * energy) / ctx.hbar
    xi = _parabolic_scaled(p, n_levels, n_cells, refinements, backend)
    eta = _parabolic_scaled(p - m, n_levels, n_cells, refinements, backend)
    return ParabolicSeparation(p, m, -xi.eigenvalues, -eta.eigenvalues, xi, eta, kappa)


# --------------------------------------------------------- 4D oscillator


def solve_oscillator(L: int, omega: float, ctx: Optional[PhysicalContext] = None, n_levels: int = 3,
                     n_cells: int = 1024, refinements: int = 2, backend=None) -> EigenResult:
    """Energies of the 4D isotropic oscillator in the hyperradial channel ``L``.

    With ``Psi = u**(-3/2) chi(u) Y_L``::

        -(hbar^2/2M) chi'' + [hbar^2 (L + 1/2)(L + 3/2) / (2 M u^2) + M omega^2 u^2 / 2] chi = E chi
    """
    ctx = ctx or default_context()
    if L < 0:
        raise InvalidParameterError("L must be nonnegative")
    if not omega > 0:
        raise InvalidParameterError("omega must be positive")
    c = L + 1.5
    u_max = 6.0 + math.sqrt(2.0 * (2 * n_levels + L + 2))
    grid = Grid1D(0.0, u_max, n_cells, "oscillator-semiline")
    res = _solve(grid, lambda u: 0.5 * np.ones_like(u), lambda u: 2.0 * c * np.log(u),
                 lambda u: 0.5 * u * u, "natural", "dirichlet", n_levels, refinements, None, backend)
    unit = ctx.hbar * omega
    length = math.sqrt(ctx.hbar / (ctx.M * omega))
    return EigenResult(res.eigenvalues * unit, res.error_estimate * unit,
                       Grid1D(0.0, u_max * length, n_cells, "oscillator-semiline"),
                       tuple(level * unit for level in res.levels))


__all__ = [
    "EigenResult",
    "Grid1D",
    "ParabolicSeparation",
    "angular_exponents",
    "angular_potential",
    "default_radial_grid",
    "radial_exponent",
    "richardson",
    "separation_label",
    "solve_angular",
    "solve_oscillator",
    "solve_parabolic",
    "solve_radial",
]

