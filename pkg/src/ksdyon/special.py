"""Terminating hypergeometric series, generalized Laguerre polynomials and
Gauss quadrature rules.

Every function that appears in the bound-state eigenfunctions has a
nonpositive-integer first parameter, so only the terminating series are
provided. Inputs ``x`` may be scalars or numpy arrays.
"""
from __future__ import annotations

import dataclasses
import math
import numbers
from typing import Callable, NamedTuple

import numpy as np
from scipy import special as _sp

from .errors import InvalidParameterError


class PolynomialEval(NamedTuple):
    """Series value together with summation diagnostics."""

    value: float | np.ndarray
    degree: int
    terms_summed: int


def _nonneg_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 0:
        raise InvalidParameterError(f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def _check_c(c):
    if float(c) <= 0 and float(c) == round(float(c)):
        raise InvalidParameterError(f"c must not be a nonpositive integer, got {c!r}")


def _scalar_or_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def laguerre(n, k, x):
    """Generalized Laguerre polynomial ``L_n^k(x)`` by three-term recurrence.

    ``(j+1) L_{j+1} = (2j + 1 + k - x) L_j - (j + k) L_{j-1}``

    Parameters
    ----------
    n : int
        Degree, ``n >= 0``.
    k : float
        Order, ``k > -1``; need not be an integer.
    x : float or numpy.ndarray
        Evaluation points.
    """
    n = _nonneg_int(n, "n")
    if not k > -1:
        raise InvalidParameterError(f"k must exceed -1, got {k!r}")
    x, scalar = _scalar_or_array(x)
    prev = np.ones_like(x)
    if n == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + k - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + k - x) * cur - (j + k) * prev) / (j + 1)
    return float(cur) if scalar else cur


def laguerre_series(n, k, x):
    """Direct power-series evaluation of ``L_n^k(x)``.

    Binomials ``C(n+k, n-i)`` come from log-gamma, so non-integer ``k``
    works. Kept as an independent check on :func:`laguerre`.
    """
    n = _nonneg_int(n, "n")
    if not k > -1:
        raise InvalidParameterError(f"k must exceed -1, got {k!r}")
    x, scalar = _scalar_or_array(x)
    total = np.zeros_like(x)
    lg_top = math.lgamma(n + k + 1)
    for i in range(n + 1):
        coeff = math.exp(lg_top - math.lgamma(n - i + 1) - math.lgamma(k + i + 1) - math.lgamma(i + 1))
        total = total + (-1) ** i * coeff * x**i
    return float(total) if scalar else total


def _terminating_sum(nterm, ratio, x, full_output):
    x, scalar = _scalar_or_array(x)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for j in range(nterm):
        term = term * ratio(j) * x
        total = total + term
    value = float(total) if scalar else total
    if full_output:
        return PolynomialEval(value, nterm, nterm + 1)
    return value


def gauss_2f1_terminating(n_term, b, c, x, full_output=False):
    """Gauss series ``2F1(-n_term, b; c; x)``, a polynomial of degree ``n_term``.

    Raises
    ------
    InvalidParameterError
        If ``n_term`` is not a nonnegative integer or ``c`` is a
        nonpositive integer.
    """
    n_term = _nonneg_int(n_term, "n_term")
    _check_c(c)
    a = -n_term
    return _terminating_sum(
        n_term, lambda j: (a + j) * (b + j) / ((c + j) * (j + 1)), x, full_output
    )


def kummer_1f1_terminating(a_neg, c, x, full_output=False):
    """Confluent series ``1F1(a_neg; c; x)`` for ``a_neg = 0, -1, -2, ...``."""
    if isinstance(a_neg, bool) or not isinstance(a_neg, numbers.Integral) or a_neg > 0:
        raise InvalidParameterError(f"a_neg must be a nonpositive integer, got {a_neg!r}")
    _check_c(c)
    m = -int(a_neg)
    return _terminating_sum(m, lambda j: (-m + j) / ((c + j) * (j + 1)), x, full_output)


def laguerre_kummer_ratio(n, k):
    """``(k+1)_n / n!`` so that ``L_n^k(x) = ratio * 1F1(-n; k+1; x)``."""
    n = _nonneg_int(n, "n")
    return math.exp(math.lgamma(k + 1 + n) - math.lgamma(k + 1) - math.lgamma(n + 1))


@dataclasses.dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights for ``int w(x) f(x) dx``.

    ``kind`` is ``'legendre'`` (unit weight on ``domain``) or
    ``'laguerre'`` (weight ``x**alpha * exp(-x)`` on ``[0, inf)``).
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    domain: tuple
    alpha: float = 0.0

    @property
    def measure(self) -> float:
        """Total mass of the weight function."""
        if self.kind == "legendre":
            return self.domain[1] - self.domain[0]
        return math.gamma(self.alpha + 1)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


def quadrature(kind, order, domain=None, alpha=0.0) -> QuadratureRule:
    """Build a Gauss rule exact for polynomials of degree ``2*order - 1``.

    Parameters
    ----------
    kind : {'legendre', 'laguerre'}
    order : int
        Number of nodes.
    domain : tuple, optional
        Interval for the Legendre rule, default ``(-1, 1)``.
    alpha : float
        Exponent of the Laguerre weight ``x**alpha e**-x``, ``alpha > -1``.
    """
    if isinstance(order, bool) or not isinstance(order, numbers.Integral) or order < 1:
        raise InvalidParameterError(f"order must be a positive integer, got {order!r}")
    if kind == "legendre":
        a, b = (-1.0, 1.0) if domain is None else (float(domain[0]), float(domain[1]))
        if not b > a:
            raise InvalidParameterError("domain must be an increasing interval")
        x, w = np.polynomial.legendre.leggauss(order)
        nodes = 0.5 * (b - a) * x + 0.5 * (b + a)
        return QuadratureRule(nodes, 0.5 * (b - a) * w, "legendre", (a, b))
    if kind == "laguerre":
        if not alpha > -1:
            raise InvalidParameterError(f"alpha must exceed -1, got {alpha!r}")
        x, w = _sp.roots_genlaguerre(order, alpha)
        return QuadratureRule(np.asarray(x), np.asarray(w), "laguerre", (0.0, math.inf), float(alpha))
    raise InvalidParameterError(f"unsupported quadrature kind {kind!r}")


def pochhammer(a, j: int) -> float:
    """Rising factorial ``(a)_j``."""
    out = 1.0
    for i in range(_nonneg_int(j, "j")):
        out *= a + i
    return out


def laguerre_norm(n, k) -> float:
    """``Gamma(n+k+1) / n!``, the squared norm of ``L_n^k`` under ``x^k e^-x``."""
    return math.exp(math.lgamma(n + k + 1) - math.lgamma(n + 1))


__all__ = [
    "PolynomialEval",
    "QuadratureRule",
    "gauss_2f1_terminating",
    "kummer_1f1_terminating",
    "laguerre",
    "laguerre_kummer_ratio",
    "laguerre_norm",
    "laguerre_series",
    "pochhammer",
    "quadrature",
]

