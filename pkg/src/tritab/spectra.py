"""Structured tridiagonal families with closed-form spectra.

Three families, each built from bands and solved in closed form:

* ``A_n`` — zero diagonal, unit superdiagonal, subdiagonal (2, 1, ..., 1).
  Its characteristic polynomial is D_n(x) = 2 T_n(x/2) and its eigenvalues
  are 2 cos((2k+1)pi/(2n)), k = 0..n-1.
* ``P_n(a)`` — zero diagonal, unit superdiagonal, constant subdiagonal a;
  characteristic polynomial (sqrt a)^n U_n(x / (2 sqrt a)).
* ``Q_n(a, b, c)`` — constant diagonal a, superdiagonal b, subdiagonal
  (2c, c, ..., c).  A shift/scale of A_n: the characteristic polynomial is
  (sqrt(bc))^n D_n((x-a)/sqrt(bc)) and the eigenvalues follow suit.

Eigenvalue arrays are returned in descending order.
"""

from __future__ import annotations

import math

import numpy as np

from .chebyshev import cheb_t, cheb_u
from .errors import NonPositiveParameterError, NonPositiveProductError
from .tridiag import TridiagonalMatrix


def make_a(n: int) -> TridiagonalMatrix:
    """The unit-band matrix A_n with doubled first subdiagonal entry."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    sub = np.ones(n - 1)
    if n > 1:
        sub[0] = 2.0
    return TridiagonalMatrix(sub=sub, diag=np.zeros(n), sup=np.ones(n - 1))


def eigs_a(n: int) -> np.ndarray:
    """Eigenvalues of A_n: 2 cos((2k+1)pi/(2n)), descending."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    k = np.arange(n)
    return 2.0 * np.cos((2 * k + 1) * np.pi / (2 * n))


def charpoly_a_eval(n: int, x: float) -> float:
    """D_n(x) = det(xI - A_n) = 2 T_n(x/2)."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    return 2.0 * cheb_t(n, x / 2.0)


def make_p(n: int, a: float) -> TridiagonalMatrix:
    """Zero diagonal, unit superdiagonal, constant subdiagonal a > 0."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    if not a > 0:
        raise NonPositiveParameterError(f"subdiagonal constant must be > 0, got {a}")
    return TridiagonalMatrix(
        sub=np.full(n - 1, float(a)), diag=np.zeros(n), sup=np.ones(n - 1)
    )


def charpoly_p_eval(n: int, a: float, x: float) -> float:
    """det(xI - P_n(a)) = (sqrt a)^n U_n(x / (2 sqrt a))."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    if not a > 0:
        raise NonPositiveParameterError(f"subdiagonal constant must be > 0, got {a}")
    r = math.sqrt(a)
    return r**n * cheb_u(n, x / (2.0 * r))


def make_q(n: int, a: float, b: float, c: float) -> TridiagonalMatrix:
    """Constant diagonal a, superdiagonal b, subdiagonal (2c, c, ..., c).

    Any real bands give a valid matrix, so construction does not constrain
    b*c; the closed-form spectrum does (see :func:`eigs_q`).
    """
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    sub = np.full(n - 1, float(c))
    if n > 1:
        sub[0] = 2.0 * c
    return TridiagonalMatrix(
        sub=sub, diag=np.full(n, float(a)), sup=np.full(n - 1, float(b))
    )


def eigs_q(n: int, a: float, b: float, c: float) -> np.ndarray:
    """Eigenvalues of Q_n: a + 2 sqrt(bc) cos((2k+1)pi/(2n)), descending.

    Requires b*c > 0; otherwise the spectrum is not real-symmetrizable and
    this closed form does not apply.
    """
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    if not b * c > 0:
        raise NonPositiveProductError(f"b*c must be > 0, got b={b}, c={c}")
    k = np.arange(n)
    return a + 2.0 * math.sqrt(b * c) * np.cos((2 * k + 1) * np.pi / (2 * n))


def charpoly_q_eval(n: int, a: float, b: float, c: float, x: float) -> float:
    """det(xI - Q_n) = (sqrt(bc))^n D_n((x - a) / sqrt(bc)), for b*c > 0."""
    if n < 1:
        raise NonPositiveParameterError(f"order must be >= 1, got {n}")
    if not b * c > 0:
        raise NonPositiveProductError(f"b*c must be > 0, got b={b}, c={c}")
    r = math.sqrt(b * c)
    return r**n * charpoly_a_eval(n, (x - a) / r)
