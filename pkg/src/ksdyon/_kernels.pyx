# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Sturm-sequence kernels for symmetric tridiagonal matrices."""
import numpy as np

from libc.math cimport fabs, fmax
from libc.float cimport DBL_EPSILON, DBL_MIN


cdef Py_ssize_t _count(const double[::1] d, const double[::1] e2, double x,
                       double pivmin) noexcept nogil:
    cdef Py_ssize_t i, n = d.shape[0], cnt = 0
    cdef double q = d[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    if q < 0:
        cnt += 1
    for i in range(1, n):
        q = d[i] - x - e2[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0:
            cnt += 1
    return cnt


def sturm_count(double[::1] d, double[::1] e2, double x, double pivmin):
    """Number of eigenvalues strictly below ``x``."""
    cdef Py_ssize_t c
    with nogil:
        c = _count(d, e2, x, pivmin)
    return c


def bisect_lowest(double[::1] d, double[::1] e2, Py_ssize_t k, double lo0,
                  double hi0, double pivmin, int max_iter=200):
    """Bisect the ``k`` lowest eigenvalues inside the bracket ``[lo0, hi0]``."""
    cdef Py_ssize_t j, c
    cdef int it
    cdef double lo, hi, mid, start = lo0
    out = np.empty(k, dtype=np.float64)
    cdef double[::1] res = out
    with nogil:
        for j in range(k):
            lo = start
            hi = hi0
            for it in range(max_iter):
                mid = 0.5 * (lo + hi)
                if hi - lo <= 2.0 * DBL_EPSILON * fmax(fabs(lo), fabs(hi)) + pivmin:
                    break
                if mid <= lo or mid >= hi:
                    break
                c = _count(d, e2, mid, pivmin)
                if c >= j + 1:
                    hi = mid
                else:
                    lo = mid
            res[j] = 0.5 * (lo + hi)
            start = lo
    return out
