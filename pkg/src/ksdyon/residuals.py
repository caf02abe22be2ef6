"""Operator residuals of closed-form eigenfunctions.

Each separated differential operator is applied to a closed-form factor
with fourth-order central differences, and the result is compared with
``eigenvalue * psi``. The figure of merit is
``max |L[psi] - eigenvalue * psi| / max |psi|`` over interior grid points.

Operator identifiers:

``eq34``
    ``-(1/2r^2)(r^2 R')' + [(lambda(lambda+1) + m^2)/(2r^2) - M e^2/(hbar^2 r)] R``
    with eigenvalue ``M eps / hbar^2``.
``eq35``
    ``-(1/sin)(sin Z')' + [p^2/sin^2 - 2mp/(1+cos) + m^2(1-cos)/(1+cos)] Z``
    with eigenvalue ``lambda(lambda+1)``.
``eq43`` / ``eq44``
    ``(1/N)(xi N')' - p^2/xi + (M eps / 2 hbar^2) xi`` (resp. ``eta`` with
    ``(p - m)^2``) with eigenvalue ``kappa * alpha``.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .errors import KSDyonError
from .numerics import Grid1D
from .units import PhysicalContext, default_context
from .wavefunctions import (
    AngularState,
    ParabolicState,
    RadialState,
    angular_eval,
    parabolic_factor,
    radial_eval,
)

OPERATORS = ("eq34", "eq35", "eq43", "eq44")
DEFAULT_STEP = 1e-3


def derivatives(f, x, h):
    """Fourth-order central first and second derivatives of ``f`` at ``x``."""
    fm2, fm1, f0, fp1, fp2 = (f(x + s * h) for s in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    return f0, d1, d2


def _grid_points(grid: Optional[Grid1D], lo, hi, h):
    if grid is not None:
        return grid.points, grid.spacing
    n = int(round((hi - lo) / h))
    return lo + h * np.arange(n + 1), h


def _apply_radial(state: RadialState, ctx, grid, h):
    scale = 1.0 / (2.0 * state.kappa)
    extent = 2.0 * (state.n + state.k) + 40.0
    r, step = _grid_points(grid, 0.1 * scale, extent * scale, h * scale * 2.0)
    R, d1, d2 = derivatives(lambda x: radial_eval(state, x), r, step)
    centrifugal = 0.25 * (state.k * state.k - 1.0)
    op = -0.5 * (d2 + 2.0 * d1 / r) + (0.5 * centrifugal / (r * r) - ctx.coupling / r) * R
    return op, R


def _angular_operator(p, m, theta, Z, d1, d2):
    s, c = np.sin(theta), np.cos(theta)
    pot = p * p / (s * s) - 2.0 * m * p / (1.0 + c) + m * m * (1.0 - c) / (1.0 + c)
    return -(d2 + c / s * d1) + pot * Z


def _apply_angular(state: AngularState, grid, h):
    theta, step = _grid_points(grid, 0.02, math.pi - 0.02, h)
    Z, d1, d2 = derivatives(lambda t: angular_eval(state, t), theta, step)
    return _angular_operator(state.p, state.m, theta, Z, d1, d2), Z


def _apply_parabolic(state: ParabolicState, ctx, grid, h, which):
    kappa = state.kappa
    extent = 2.0 * (state.m1 + state.m2 + abs(state.p) + abs(state.p - state.m)) + 40.0
    x, step = _grid_points(grid, 0.05 / kappa, extent / kappa, h / kappa)
    variable = "xi" if which == "eq43" else "eta"
    label = state.p if which == "eq43" else state.p - state.m
    F, d1, d2 = derivatives(lambda v: parabolic_factor(state, variable, v), x, step)
    mu = -0.5 * kappa * kappa  # M eps / hbar^2
    op = x * d2 + d1 - (label * label / x) * F + 0.5 * mu * x * F
    return op, F


def default_eigenvalue(operator_id, state, ctx):
    """Eigenvalue implied by the closed form of ``state``."""
    if operator_id == "eq34":
        return -0.5 * state.kappa**2
    if operator_id == "eq35":
        return state.separation_constant
    kappa = state.kappa
    if operator_id == "eq43":
        return -kappa * (state.m1 + abs(state.p) + 0.5)
    return -kappa * (state.m2 + abs(state.p - state.m) + 0.5)


def residual(operator_id: str, state, grid: Optional[Grid1D] = None, eigenvalue: Optional[float] = None,
             ctx: Optional[PhysicalContext] = None, h: float = DEFAULT_STEP) -> float:
    """Normalized operator residual of a closed-form factor.

    Parameters
    ----------
    operator_id : {'eq34', 'eq35', 'eq43', 'eq44'}
    state : RadialState, AngularState or ParabolicState
    grid : Grid1D, optional
        Sample points; by default an interior grid with step ``h`` in the
        dimensionless variable of the factor.
    eigenvalue : float, optional
        Defaults to the value implied by the closed form. For ``'eq35'``
        pass ``'fit'`` to use the least-squares Rayleigh quotient instead.

    Returns
    -------
    float
        ``inf`` when the factor cannot be evaluated (singular branch).
    """
    ctx = ctx or default_context()
    if operator_id not in OPERATORS:
        raise ValueError(f"operator_id must be one of {OPERATORS}")
    try:
        with np.errstate(all="ignore"):
            if operator_id == "eq34":
                op, psi = _apply_radial(state, ctx, grid, h)
            elif operator_id == "eq35":
                op, psi = _apply_angular(state, grid, h)
            else:
                op, psi = _apply_parabolic(state, ctx, grid, h, operator_id)
            if isinstance(eigenvalue, str) and eigenvalue == "fit":
                eigenvalue = float(np.dot(op, psi) / np.dot(psi, psi))
            elif eigenvalue is None:
                eigenvalue = default_eigenvalue(operator_id, state, ctx)
            scale = np.max(np.abs(psi))
            res = float(np.max(np.abs(op - eigenvalue * psi)) / scale)
    except (KSDyonError, ValueError, ZeroDivisionError, OverflowError):
        return math.inf
    return res if math.isfinite(res) else math.inf


def select_convention(kind: str, cases=None) -> str:
    """Convention whose closed forms pass their residual tests.

    ``kind`` is ``'angular'`` or ``'parabolic'``. Returns the first
    convention with every residual below ``1e-6`` over ``cases`` (default:
    all labels up to 3).
    """
    from .wavefunctions import ANGULAR_CONVENTIONS, PARABOLIC_CONVENTIONS

    if kind == "angular":
        cases = cases or [(n, p, m) for m in range(0, 3) for p in range(0, 4) for n in range(0, 3)]
        for conv in ANGULAR_CONVENTIONS:
            if all(residual("eq35", AngularState(n, p, m, "eq36", conv, check_regular=False)) < 1e-6
                   for n, p, m in cases):
                return conv
    elif kind == "parabolic":
        cases = cases or [(p, m, m1, m2) for p in range(0, 4) for m in range(0, p + 1)
                          for m1 in range(0, 3) for m2 in range(0, 3)]
        for conv in PARABOLIC_CONVENTIONS:
            ok = True
            for p, m, m1, m2 in cases:
                st = ParabolicState(p, m, m1, m2, 1.0, conv)
                if residual("eq43", st) >= 1e-6 or residual("eq44", st) >= 1e-6:
                    ok = False
                    break
            if ok:
                return conv
    else:
        raise ValueError("kind must be 'angular' or 'parabolic'")
    raise RuntimeError(f"no {kind} convention passes its residual test")


__all__ = ["OPERATORS", "default_eigenvalue", "derivatives", "residual", "select_convention"]
