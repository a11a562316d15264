"""Pure-Python / numpy implementations of the numeric kernels.

``tritab._kernels`` falls back to this module when the compiled extension is
missing.  Every function here mirrors its Cython twin operation for
operation (same expressions, same association order, no fused multiply-add),
so the two lanes produce bit-identical results and either one can back the
test suite.
"""

from __future__ import annotations

import math

import numpy as np

_LN2 = math.log(2.0)
_BIG = 2.0**512
_SMALL = 2.0**-512


def det_eval(diag_eff, offprod) -> float:
    """Three-term determinant recurrence.

    ``diag_eff[k]`` is the (k, k) entry and ``offprod[k]`` the product of the
    (k, k+1) and (k+1, k) entries of a tridiagonal matrix.  Returns its
    determinant; for very large orders the value can overflow to +-inf, in
    which case ``det_eval_slog`` is the right tool.
    """
    d = [float(v) for v in diag_eff]
    c = [float(v) for v in offprod]
    fm1 = 1.0
    f = d[0]
    for k in range(1, len(d)):
        f, fm1 = d[k] * f - c[k - 1] * fm1, f
    return f


def det_eval_slog(diag_eff, offprod) -> tuple[float, float]:
    """Sign and natural log of the absolute determinant.

    Same recurrence as ``det_eval`` but with periodic power-of-two rescaling,
    so it neither overflows nor underflows.  Returns ``(sign, log|det|)``
    with sign in {-1.0, 0.0, 1.0}; a zero determinant reports ``-inf``.
    """
    d = [float(v) for v in diag_eff]
    c = [float(v) for v in offprod]
    fm1 = 1.0
    f = d[0]
    exp2 = 0
    for k in range(1, len(d)):
        f, fm1 = d[k] * f - c[k - 1] * fm1, f
        m = max(abs(f), abs(fm1))
        if m > _BIG:
            f *= _SMALL
            fm1 *= _SMALL
            exp2 += 512
        elif 0.0 < m < _SMALL:
            f *= _BIG
            fm1 *= _BIG
            exp2 -= 512
    if f == 0.0:
        return 0.0, -math.inf
    sign = 1.0 if f > 0.0 else -1.0
    return sign, math.log(abs(f)) + exp2 * _LN2


def sturm_count(diag, offsq, x: float, pivmin: float) -> int:
    """Number of eigenvalues <= x of the symmetric tridiagonal matrix with
    diagonal ``diag`` and squared off-diagonal ``offsq``.

    Classic Sturm-sequence pivot count; pivots with magnitude below
    ``pivmin`` are replaced by ``-pivmin`` so the count stays well defined
    when x hits an eigenvalue of a leading block.
    """
    d = [float(v) for v in diag]
    e2 = [float(v) for v in offsq]
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    count = 1 if q < 0.0 else 0
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _sturm_count_vec(diag, offsq, xs, pivmin):
    # Vectorized over the evaluation points; per point it performs exactly
    # the scalar sequence, so results match sturm_count bit for bit.
    q = diag[0] - xs
    np.copyto(q, -pivmin, where=np.abs(q) < pivmin)
    count = (q < 0.0).astype(np.intp)
    for i in range(1, len(diag)):
        q = diag[i] - xs - offsq[i - 1] / q
        np.copyto(q, -pivmin, where=np.abs(q) < pivmin)
        count += q < 0.0
    return count


def bisect_spectrum(diag, offsq, lo: float, hi: float, tol: float, maxit: int, pivmin: float):
    """All eigenvalues of a symmetric tridiagonal matrix, ascending.

    For each k the k-th smallest eigenvalue is isolated by bisection on the
    Sturm count over [lo, hi]; iteration stops when the bracket is narrower
    than ``tol`` or after ``maxit`` steps.  The brackets for all k are
    advanced in lockstep (one vectorized count per sweep), which follows the
    identical trajectory a per-k scalar loop would take.
    """
    diag = np.ascontiguousarray(diag, dtype=np.float64)
    offsq = np.ascontiguousarray(offsq, dtype=np.float64)
    n = diag.shape[0]
    ks = np.arange(1, n + 1)
    a = np.full(n, lo, dtype=np.float64)
    b = np.full(n, hi, dtype=np.float64)
    for _ in range(maxit):
        active = (b - a) > tol
        if not active.any():
            break
        mid = 0.5 * (a[active] + b[active])
        ge = _sturm_count_vec(diag, offsq, mid, pivmin) >= ks[active]
        idx = np.flatnonzero(active)
        b[idx[ge]] = mid[ge]
        a[idx[~ge]] = mid[~ge]
    return 0.5 * (a + b)


def plu_last_row(sub, diag, sup):
    """Dense last row of L and the corner of U for the cyclic-pivot
    factorization of a tridiagonal matrix.

    Returns ``(lrow, ucorner)`` where ``lrow`` has length n-1.  The caller
    guarantees n >= 3 and a zero-free subdiagonal.
    """
    b = [float(v) for v in sub]
    d = [float(v) for v in diag]
    s = [float(v) for v in sup]
    n = len(d)
    lrow = np.empty(n - 1, dtype=np.float64)
    lrow[0] = d[0] / b[0]
    lrow[1] = -(d[0] * d[1] - s[0] * b[0]) / (b[0] * b[1])
    l2, l1 = float(lrow[0]), float(lrow[1])
    for i in range(3, n):  # 1-based row index of L entries 3..n-1
        l2, l1 = l1, -(d[i - 1] * l1 + s[i - 2] * l2) / b[i - 1]
        lrow[i - 1] = l1
    ucorner = -d[n - 1] * l1 - s[n - 2] * l2
    return lrow, ucorner
