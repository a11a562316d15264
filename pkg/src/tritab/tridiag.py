"""Band-stored tridiagonal matrices and their determinant recurrence.

An order-n tridiagonal matrix is kept as three bands: ``sub`` (length n-1,
entry i sits at row i+1, column i), ``diag`` (length n) and ``sup`` (length
n-1, entry i at row i, column i+1), all 0-based.  Determinants come from the
classic three-term recurrence

    |H_1| = h_11,   |H_2| = h_11 h_22 - h_12 h_21,
    |H_k| = h_kk |H_{k-1}| - h_{k-1,k} h_{k,k-1} |H_{k-2}|,

which only ever sees the diagonal and the products of paired off-diagonal
entries; that observation drives most of the closed forms elsewhere in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DimensionMismatchError, OrderTooLargeError

#: Cap on the order accepted by :func:`charpoly_coeffs`.  Coefficient vectors
#: are dense, so the cost is quadratic in n; this bound keeps worst-case calls
#: around a millisecond-to-seconds scale rather than unbounded.
MAX_CHARPOLY_ORDER = 1024


def _frozen_band(values, name: str, length: int | None = None) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"{name} must be one-dimensional")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatchError(
            f"{name} has length {arr.shape[0]}, expected {length}"
        )
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains a non-finite entry")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Immutable real tridiagonal matrix stored as three bands."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray

    def __post_init__(self):
        diag = _frozen_band(self.diag, "diag")
        if diag.shape[0] < 1:
            raise DimensionMismatchError("matrix order must be at least 1")
        n = diag.shape[0]
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "sub", _frozen_band(self.sub, "sub", n - 1))
        object.__setattr__(self, "sup", _frozen_band(self.sup, "sup", n - 1))

    @property
    def n(self) -> int:
        return self.diag.shape[0]

    def offdiag_products(self) -> np.ndarray:
        """Pairwise products sub[i]*sup[i]; all the recurrence needs."""
        return self.sub * self.sup

    def to_dense(self) -> np.ndarray:
        dense = np.diag(self.diag)
        if self.n > 1:
            dense += np.diag(self.sub, -1) + np.diag(self.sup, 1)
        return dense

    def __eq__(self, other):
        if not isinstance(other, TridiagonalMatrix):
            return NotImplemented
        return (
            np.array_equal(self.sub, other.sub)
            and np.array_equal(self.diag, other.diag)
            and np.array_equal(self.sup, other.sup)
        )


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with coefficients in ascending degree order.

    The zero polynomial is the empty tuple; trailing zero coefficients are
    stripped on construction, so equal polynomials compare equal.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        cleaned = tuple(float(c) for c in self.coeffs)
        if any(not np.isfinite(c) for c in cleaned):
            raise ValueError("polynomial coefficients must be finite")
        while cleaned and cleaned[-1] == 0.0:
            cleaned = cleaned[:-1]
        object.__setattr__(self, "coeffs", cleaned)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation; accepts scalars or numpy arrays."""
        result = 0.0 * np.asarray(x, dtype=np.float64) if not np.isscalar(x) else 0.0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Polynomial(tuple(summed))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial(())
            return Polynomial(tuple(np.convolve(self.coeffs, other.coeffs)))
        return Polynomial(tuple(float(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def times_x(self) -> "Polynomial":
        """The polynomial multiplied by x."""
        if not self.coeffs:
            return self
        return Polynomial((0.0,) + self.coeffs)


def det_recurrence(matrix: TridiagonalMatrix) -> float:
    """Determinant via the three-term recurrence.

    Only the products sub[i]*sup[i] enter, so the value is invariant under
    any rebalancing sub[i] -> t*sub[i], sup[i] -> sup[i]/t.  May overflow to
    +-inf for orders in the many hundreds; see :func:`slogdet_recurrence`.
    """
    return _kernels.det_eval(matrix.diag, matrix.offdiag_products())


def slogdet_recurrence(matrix: TridiagonalMatrix) -> tuple[float, float]:
    """(sign, log|det|) via the rescaled three-term recurrence."""
    return _kernels.det_eval_slog(matrix.diag, matrix.offdiag_products())


def charpoly_eval(matrix: TridiagonalMatrix, x: float) -> float:
    """det(xI - M) evaluated at a point, without forming coefficients.

    The off-diagonal entries of xI - M are the negated bands, so their
    pairwise products are unchanged and the same kernel applies with the
    effective diagonal x - diag.
    """
    return _kernels.det_eval(x - matrix.diag, matrix.offdiag_products())


def slog_charpoly_eval(matrix: TridiagonalMatrix, x: float) -> tuple[float, float]:
    """(sign, log|det(xI - M)|); overflow-safe variant of charpoly_eval."""
    return _kernels.det_eval_slog(x - matrix.diag, matrix.offdiag_products())


def charpoly_coeffs(
    matrix: TridiagonalMatrix, max_order: int = MAX_CHARPOLY_ORDER
) -> Polynomial:
    """Monic characteristic polynomial det(xI - M) as dense coefficients.

    Runs the determinant recurrence in coefficient space:
    p_k = (x - d_k) p_{k-1} - (sup_{k-1} sub_{k-1}) p_{k-2}.  Orders above
    ``max_order`` are refused (quadratic cost, and coefficients of huge
    matrices overflow well before the polynomial is useful).
    """
    n = matrix.n
    if n > max_order:
        raise OrderTooLargeError(
            f"order {n} exceeds the coefficient cap {max_order}"
        )
    offprod = matrix.offdiag_products()
    prev = np.array([1.0])
    cur = np.array([-matrix.diag[0], 1.0])
    for k in range(2, n + 1):
        nxt = np.zeros(k + 1)
        nxt[1:] = cur
        nxt[:-1] -= matrix.diag[k - 1] * cur
        nxt[: k - 1] -= offprod[k - 2] * prev
        prev, cur = cur, nxt
    return Polynomial(tuple(cur))
