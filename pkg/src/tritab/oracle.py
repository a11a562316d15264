"""Brute-force reference routes, kept independent of the closed forms.

Everything the rest of the package computes with a formula can be recomputed
here the slow way: dense determinants by Gaussian elimination with partial
pivoting, eigenvalues by Sturm-sequence bisection on the symmetrized matrix,
and plain residual norms for eigenpairs.  The tests systematically compare
the two routes; nothing in this module consults the closed forms.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatchError,
    IndefiniteProductError,
    OrderTooLargeError,
)
from .tridiag import TridiagonalMatrix

#: dense_det is O(n^3) with full row copies; it exists for cross-checking
#: small cases, not as a production determinant.
DENSE_DET_MAX_ORDER = 64

_SAFMIN = float(np.finfo(np.float64).tiny)


def dense_det(matrix: np.ndarray) -> float:
    """Determinant of a small dense matrix by elimination with partial pivoting.

    Row swaps flip the sign; a pivot column of exact zeros short-circuits to
    an exact 0.0.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > DENSE_DET_MAX_ORDER:
        raise OrderTooLargeError(
            f"dense oracle handles n <= {DENSE_DET_MAX_ORDER}, got {n}"
        )
    det = 1.0
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot_row, col] == 0.0:
            return 0.0
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            det = -det
        det *= a[col, col]
        a[col + 1 :, col:] -= np.outer(a[col + 1 :, col] / a[col, col], a[col, col:])
    return det


def symmetrize(matrix: TridiagonalMatrix) -> TridiagonalMatrix:
    """Diagonal similarity transform onto a symmetric tridiagonal matrix.

    Both off-bands become sqrt(sub*sup); the diagonal is untouched.  Requires
    every product sub[i]*sup[i] > 0 (a similarity with a real diagonal scaling
    exists exactly then).
    """
    products = matrix.offdiag_products()
    if np.any(products <= 0.0):
        raise IndefiniteProductError(
            "sub[i]*sup[i] must be > 0 for every i to symmetrize"
        )
    off = np.sqrt(products)
    return TridiagonalMatrix(sub=off, diag=matrix.diag, sup=off)


def eig_roots(
    matrix: TridiagonalMatrix, tol: float = 1e-12, maxit: int = 200
) -> np.ndarray:
    """All eigenvalues by Sturm-sequence bisection, descending.

    The matrix is symmetrized first (so all eigenvalues are real and the
    Sturm count is monotone), brackets come from the Gershgorin bound, and
    each eigenvalue is bisected until the bracket is narrower than ``tol``
    (absolute) or ``maxit`` splits have been spent.  Multiple eigenvalues
    come out as repeated values.
    """
    sym = symmetrize(matrix)
    n = sym.n
    offsq = sym.offdiag_products()  # squared symmetric off-diagonal
    radius = np.zeros(n)
    if n > 1:
        e = np.abs(sym.sub)
        radius[:-1] += e
        radius[1:] += e
    lo = float(np.min(sym.diag - radius))
    hi = float(np.max(sym.diag + radius))
    span = max(1.0, abs(lo), abs(hi))
    lo -= tol + 1e-15 * span
    hi += tol + 1e-15 * span
    pivmin = _SAFMIN * max(1.0, float(offsq.max()) if n > 1 else 1.0)
    ascending = _kernels.bisect_spectrum(sym.diag, offsq, lo, hi, tol, maxit, pivmin)
    return np.ascontiguousarray(ascending[::-1])


def residual(
    matrix: TridiagonalMatrix, x: float, v: np.ndarray, side: str = "right"
) -> float:
    """Max-norm eigenpair residual: ||Mv - xv|| or ||v^T M - x v^T||."""
    v = np.asarray(v, dtype=np.float64)
    n = matrix.n
    if v.shape != (n,):
        raise DimensionMismatchError(f"vector has shape {v.shape}, expected ({n},)")
    if side == "right":
        mv = matrix.diag * v
        if n > 1:
            mv[1:] += matrix.sub * v[:-1]
            mv[:-1] += matrix.sup * v[1:]
    elif side == "left":
        mv = matrix.diag * v
        if n > 1:
            mv[1:] += matrix.sup * v[:-1]
            mv[:-1] += matrix.sub * v[1:]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return float(np.max(np.abs(mv - x * v)))
