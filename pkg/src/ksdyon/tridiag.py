"""Lowest eigenvalues of symmetric tridiagonal matrices by Sturm bisection.

The compiled kernel is used when it was built; otherwise the pure-Python
twin is loaded. Setting ``KSDYON_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("KSDYON_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_DBL_MIN = np.finfo(float).tiny


def _backend(name):
    if name is None:
        return _compiled if _compiled is not None else _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


def _prepare(d, e):
    d = np.ascontiguousarray(d, dtype=np.float64)
    e = np.ascontiguousarray(e, dtype=np.float64)
    if d.ndim != 1 or e.shape != (max(len(d) - 1, 0),):
        raise ValueError("need len(e) == len(d) - 1")
    e2 = np.ascontiguousarray(e * e)
    pivmin = _DBL_MIN * max(1.0, float(e2.max()) if len(e2) else 1.0)
    return d, e2, pivmin


def gershgorin_bounds(d, e):
    """Interval containing every eigenvalue."""
    d = np.asarray(d, dtype=float)
    ae = np.abs(np.asarray(e, dtype=float))
    radius = np.zeros_like(d)
    radius[:-1] += ae
    radius[1:] += ae
    lo = float((d - radius).min())
    hi = float((d + radius).max())
    pad = 4 * np.finfo(float).eps * max(abs(lo), abs(hi), 1.0)
    return lo - pad, hi + pad


def sturm_count(d, e, x, backend=None):
    """Number of eigenvalues of ``tridiag(e, d, e)`` strictly below ``x``."""
    d, e2, pivmin = _prepare(d, e)
    return int(_backend(backend).sturm_count(d, e2, float(x), pivmin))


def lowest_eigenvalues(d, e, k, backend=None):
    """The ``k`` smallest eigenvalues of the symmetric tridiagonal matrix.

    Parameters
    ----------
    d : array_like, shape (n,)
        Diagonal.
    e : array_like, shape (n - 1,)
        Off-diagonal.
    k : int
        Number of eigenvalues, ``1 <= k <= n``.
    backend : {None, 'compiled', 'python'}
        Kernel selection; ``None`` picks the compiled one when present.

    Returns
    -------
    numpy.ndarray
        Ascending eigenvalues, accurate to a few ulps of ``||T||``.
    """
    d, e2, pivmin = _prepare(d, e)
    if not 1 <= k <= len(d):
        raise ValueError(f"k must lie in [1, {len(d)}], got {k}")
    lo, hi = gershgorin_bounds(d, e)
    return np.asarray(_backend(backend).bisect_lowest(d, e2, int(k), lo, hi, pivmin))
