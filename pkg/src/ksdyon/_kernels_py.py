"""Pure-Python twin of :mod:`ksdyon._kernels`.

Same signatures and results; bisection runs for all requested eigenvalues
at once so each Sturm sweep is a numpy operation over the shifts.
"""
import numpy as np

_EPS = np.finfo(float).eps


def sturm_count(d, e2, x, pivmin):
    """Number of eigenvalues strictly below each shift in ``x``."""
    x = np.asarray(x, dtype=float)
    q = d[0] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(np.int64)
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count if count.ndim else int(count)


def bisect_lowest(d, e2, k, lo0, hi0, pivmin, max_iter=200):
    """Bisect the ``k`` lowest eigenvalues inside the bracket ``[lo0, hi0]``."""
    lo = np.full(k, float(lo0))
    hi = np.full(k, float(hi0))
    target = np.arange(1, k + 1)
    for _ in range(max_iter):
        width = hi - lo
        active = width > 2.0 * _EPS * np.maximum(np.abs(lo), np.abs(hi)) + pivmin
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        c = sturm_count(d, e2, mid, pivmin)
        upper = (c >= target) & active
        lower = (c < target) & active
        hi = np.where(upper, mid, hi)
        lo = np.where(lower, mid, lo)
    return 0.5 * (lo + hi)
