# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the numeric kernels.

Each function mirrors its pure-Python twin in ``_py`` expression for
expression; the extension is built with -ffp-contract=off so both lanes
produce bit-identical IEEE-754 results.
"""

from libc.math cimport fabs, log, INFINITY

import numpy as np

cdef double _LN2 = log(2.0)
cdef double _BIG = 2.0 ** 512
cdef double _SMALL = 2.0 ** -512


def det_eval(const double[::1] diag_eff, const double[::1] offprod):
    """Three-term determinant recurrence; see the pure twin for details."""
    cdef Py_ssize_t n = diag_eff.shape[0]
    cdef double fm1 = 1.0
    cdef double f = diag_eff[0]
    cdef double nxt
    cdef Py_ssize_t k
    for k in range(1, n):
        nxt = diag_eff[k] * f - offprod[k - 1] * fm1
        fm1 = f
        f = nxt
    return f


def det_eval_slog(const double[::1] diag_eff, const double[::1] offprod):
    """Sign and natural log of |det|, with power-of-two rescaling."""
    cdef Py_ssize_t n = diag_eff.shape[0]
    cdef double fm1 = 1.0
    cdef double f = diag_eff[0]
    cdef double nxt, m
    cdef long exp2 = 0
    cdef Py_ssize_t k
    for k in range(1, n):
        nxt = diag_eff[k] * f - offprod[k - 1] * fm1
        fm1 = f
        f = nxt
        m = fabs(f)
        if fabs(fm1) > m:
            m = fabs(fm1)
        if m > _BIG:
            f *= _SMALL
            fm1 *= _SMALL
            exp2 += 512
        elif 0.0 < m < _SMALL:
            f *= _BIG
            fm1 *= _BIG
            exp2 -= 512
    if f == 0.0:
        return 0.0, -INFINITY
    cdef double sign = 1.0 if f > 0.0 else -1.0
    return sign, log(fabs(f)) + exp2 * _LN2


cdef inline long _count(const double[::1] diag, const double[::1] offsq, double x, double pivmin) nogil:
    cdef Py_ssize_t n = diag.shape[0]
    cdef double q = diag[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    cdef long count = 1 if q < 0.0 else 0
    cdef Py_ssize_t i
    for i in range(1, n):
        q = diag[i] - x - offsq[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def sturm_count(const double[::1] diag, const double[::1] offsq, double x, double pivmin):
    """Number of eigenvalues <= x; see the pure twin for details."""
    return _count(diag, offsq, x, pivmin)


def bisect_spectrum(const double[::1] diag, const double[::1] offsq, double lo, double hi,
                    double tol, int maxit, double pivmin):
    """All eigenvalues of a symmetric tridiagonal matrix, ascending."""
    cdef Py_ssize_t n = diag.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double a, b, mid
    cdef Py_ssize_t k
    cdef int it
    for k in range(1, n + 1):
        a = lo
        b = hi
        for it in range(maxit):
            if (b - a) <= tol:
                break
            mid = 0.5 * (a + b)
            if _count(diag, offsq, mid, pivmin) >= k:
                b = mid
            else:
                a = mid
        ov[k - 1] = 0.5 * (a + b)
    return out


def plu_last_row(const double[::1] sub, const double[::1] diag, const double[::1] sup):
    """Dense last row of L and corner of U for the cyclic-pivot factorization."""
    cdef Py_ssize_t n = diag.shape[0]
    lrow = np.empty(n - 1, dtype=np.float64)
    cdef double[::1] lv = lrow
    lv[0] = diag[0] / sub[0]
    lv[1] = -(diag[0] * diag[1] - sup[0] * sub[0]) / (sub[0] * sub[1])
    cdef double l2 = lv[0]
    cdef double l1 = lv[1]
    cdef double nxt
    cdef Py_ssize_t i
    for i in range(3, n):
        nxt = -(diag[i - 1] * l1 + sup[i - 2] * l2) / sub[i - 1]
        l2 = l1
        l1 = nxt
        lv[i - 1] = l1
    cdef double ucorner = -diag[n - 1] * l1 - sup[n - 2] * l2
    return lrow, ucorner
