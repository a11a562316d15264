"""Character tables of P-polynomial table algebras.

A P-polynomial table algebra of dimension d+1 is determined by its first
intersection matrix B_1: a tridiagonal matrix with subdiagonal
b = (b_0, ..., b_{d-1}), diagonal a = (a_0, ..., a_d) and superdiagonal
c = (c_1, ..., c_d).  The defining relation x_1 x_i = b_{i-1} x_{i-1} +
a_i x_i + c_{i+1} x_{i+1} turns every basis element into a polynomial in
x_1:

    nu_0 = 1,  nu_1 = x,
    nu_{i+1}(x) = (x nu_i(x) - a_i nu_i(x) - b_{i-1} nu_{i-1}(x)) / c_{i+1},

and the character table is p_i(j) = nu_i(x_j) over the eigenvalues x_j of
B_1 (descending).  The generic route here (recurrence + bisection
eigenvalues) is exact by construction and adjudicates the closed forms.

Two parametrized families have fully closed-form tables:

* class I (d >= 2, alpha > 0): b = (2 alpha^2, alpha, ..., alpha),
  a = (0, ..., 0, alpha), c = (1, alpha, ..., alpha).  Eigenvalues
  x_j = 2 alpha cos(2 j pi / (2d+1)); characteristic polynomial
  2 alpha^{d+1} (T_{d+1} - T_d)(x / (2 alpha)).
* class II (d >= 2, alpha, gamma > 0): b = (2 alpha gamma, alpha, ...,
  alpha, 2 alpha), a = 0, c = (1, gamma, ..., gamma).  Eigenvalues
  x_j = 2 sqrt(alpha gamma) cos(j pi / d); characteristic polynomial
  2 (sqrt(alpha gamma))^{d+1} (T_{d+1} - T_{d-1})(x / (2 sqrt(alpha gamma))).

The character closed forms below differ from their usual printed versions:
tracking the 1/c division at every step of the recurrence (not just once)
gives, for class I,

    nu_i(x) = (x^2 - 2 alpha^2)/alpha * U_{i-2}(x/(2 alpha))
              - x * U_{i-3}(x/(2 alpha))
            = 2 alpha T_i(x / (2 alpha)),

and the class-II analogue with scale sqrt(alpha gamma) and an extra
1/gamma^{i-1}.  The generic route confirms both (and rejects the variants
with argument x/(2 sqrt(alpha)) for alpha != 1, resp. gamma != 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .chebyshev import cheb_t, cheb_u
from .errors import DimensionMismatchError, NonPositiveParameterError
from .tridiag import Polynomial, TridiagonalMatrix

_X = Polynomial((0.0, 1.0))


@dataclass(frozen=True)
class TableAlgebraSpec:
    """Structure constants (b, a, c) of a P-polynomial table algebra.

    ``b`` holds b_0..b_{d-1} (all > 0), ``a`` holds a_0..a_d (all >= 0) and
    ``c`` holds c_1..c_d (all > 0); d >= 2.
    """

    b: tuple[float, ...]
    a: tuple[float, ...]
    c: tuple[float, ...]

    def __post_init__(self):
        b = tuple(float(v) for v in self.b)
        a = tuple(float(v) for v in self.a)
        c = tuple(float(v) for v in self.c)
        d = len(b)
        if d < 2:
            raise DimensionMismatchError(f"need d >= 2, got d = {d}")
        if len(a) != d + 1 or len(c) != d:
            raise DimensionMismatchError(
                f"band lengths must be |b| = |c| = d, |a| = d+1; got "
                f"|b|={len(b)}, |a|={len(a)}, |c|={len(c)}"
            )
        if not all(math.isfinite(v) for v in b + a + c):
            raise ValueError("structure constants must be finite")
        if any(v <= 0.0 for v in b):
            raise NonPositiveParameterError("every b_i must be > 0")
        if any(v <= 0.0 for v in c):
            raise NonPositiveParameterError("every c_i must be > 0")
        if any(v < 0.0 for v in a):
            raise NonPositiveParameterError("every a_i must be >= 0")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @property
    def d(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class CharacterTable:
    """(d+1) x (d+1) table of character values p_i(j).

    Row 0 is all ones and row 1 lists the eigenvalues of B_1 in descending
    order (exposed as ``eigs``); row i evaluates nu_i on row 1.
    """

    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.float64, copy=True)
        if vals.ndim != 2 or vals.shape[0] != vals.shape[1] or vals.shape[0] < 3:
            raise DimensionMismatchError(
                f"character table must be square with d >= 2, got {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("character table entries must be finite")
        if not np.all(vals[0] == 1.0):
            raise ValueError("row 0 of a character table must be all ones")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def d(self) -> int:
        return self.values.shape[0] - 1

    @property
    def eigs(self) -> np.ndarray:
        return self.values[1]

    def __eq__(self, other):
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return np.array_equal(self.values, other.values)


def build_b1(spec: TableAlgebraSpec) -> TridiagonalMatrix:
    """The first intersection matrix: bands (b, a, c)."""
    return TridiagonalMatrix(sub=spec.b, diag=spec.a, sup=spec.c)


def nu_polynomials(spec: TableAlgebraSpec) -> list[Polynomial]:
    """The polynomials nu_0..nu_d expressing each basis element in x_1.

    Computed in coefficient space, dividing by c_{i+1} at every step.
    nu_i is monic up to the positive factor 1/(c_2 ... c_i), so it has
    degree exactly i and positive leading coefficient.
    """
    nus = [Polynomial((1.0,)), _X]
    for i in range(1, spec.d):
        # x nu_i - a_i nu_i - b_{i-1} nu_{i-1}, then divide by c_{i+1}
        nxt = nus[i].times_x() - spec.a[i] * nus[i] - spec.b[i - 1] * nus[i - 1]
        nus.append((1.0 / spec.c[i]) * nxt)  # c[i] stores c_{i+1}
    return nus


def character_table(spec: TableAlgebraSpec) -> CharacterTable:
    """Generic character table: bisection eigenvalues + nu recurrence."""
    eigs = oracle.eig_roots(build_b1(spec))
    nus = nu_polynomials(spec)
    d = spec.d
    vals = np.empty((d + 1, d + 1))
    vals[0] = 1.0
    vals[1] = eigs
    for i in range(2, d + 1):
        vals[i] = nus[i](eigs)
    return CharacterTable(vals)


# ---------------------------------------------------------------------------
# class I
# ---------------------------------------------------------------------------

def class_i_spec(d: int, alpha: float) -> TableAlgebraSpec:
    """Structure constants of the class-I family."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not alpha > 0:
        raise NonPositiveParameterError(f"alpha must be > 0, got {alpha}")
    return TableAlgebraSpec(
        b=(2.0 * alpha * alpha,) + (alpha,) * (d - 1),
        a=(0.0,) * d + (alpha,),
        c=(1.0,) + (alpha,) * (d - 1),
    )


def class_i_eigs(d: int, alpha: float) -> np.ndarray:
    """Eigenvalues 2 alpha cos(2 j pi / (2d+1)), j = 0..d, descending."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not alpha > 0:
        raise NonPositiveParameterError(f"alpha must be > 0, got {alpha}")
    j = np.arange(d + 1)
    return 2.0 * alpha * np.cos(2.0 * j * np.pi / (2 * d + 1))


def class_i_charpoly_eval(d: int, alpha: float, x: float) -> float:
    """det(xI - B_1) = 2 alpha^{d+1} (T_{d+1}(y) - T_d(y)), y = x/(2 alpha)."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not alpha > 0:
        raise NonPositiveParameterError(f"alpha must be > 0, got {alpha}")
    y = x / (2.0 * alpha)
    return 2.0 * alpha ** (d + 1) * (cheb_t(d + 1, y) - cheb_t(d, y))


def class_i_characters(d: int, alpha: float) -> CharacterTable:
    """Closed-form class-I character table.

    Row i (2 <= i <= d) evaluates
    (x^2 - 2 alpha^2)/alpha * U_{i-2}(y) - x * U_{i-3}(y) with
    y = x/(2 alpha) at each eigenvalue; rows 0 and 1 are ones and the
    eigenvalues.
    """
    xs = class_i_eigs(d, alpha)
    vals = np.empty((d + 1, d + 1))
    vals[0] = 1.0
    vals[1] = xs
    for i in range(2, d + 1):
        for j, x in enumerate(xs):
            y = x / (2.0 * alpha)
            vals[i, j] = (x * x - 2.0 * alpha * alpha) / alpha * cheb_u(
                i - 2, y
            ) - x * cheb_u(i - 3, y)
    return CharacterTable(vals)


# ---------------------------------------------------------------------------
# class II
# ---------------------------------------------------------------------------

def class_ii_spec(d: int, alpha: float, gamma: float) -> TableAlgebraSpec:
    """Structure constants of the class-II family."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not (alpha > 0 and gamma > 0):
        raise NonPositiveParameterError(
            f"alpha and gamma must be > 0, got alpha={alpha}, gamma={gamma}"
        )
    return TableAlgebraSpec(
        b=(2.0 * alpha * gamma,) + (alpha,) * (d - 2) + (2.0 * alpha,),
        a=(0.0,) * (d + 1),
        c=(1.0,) + (gamma,) * (d - 1),
    )


def class_ii_eigs(d: int, alpha: float, gamma: float) -> np.ndarray:
    """Eigenvalues 2 sqrt(alpha gamma) cos(j pi / d), j = 0..d, descending."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not (alpha > 0 and gamma > 0):
        raise NonPositiveParameterError(
            f"alpha and gamma must be > 0, got alpha={alpha}, gamma={gamma}"
        )
    j = np.arange(d + 1)
    return 2.0 * math.sqrt(alpha * gamma) * np.cos(j * np.pi / d)


def class_ii_charpoly_eval(d: int, alpha: float, gamma: float, x: float) -> float:
    """det(xI - B_1) = 2 r^{d+1} (T_{d+1}(u) - T_{d-1}(u)), r = sqrt(alpha gamma),
    u = x/(2r)."""
    if d < 2:
        raise DimensionMismatchError(f"need d >= 2, got d = {d}")
    if not (alpha > 0 and gamma > 0):
        raise NonPositiveParameterError(
            f"alpha and gamma must be > 0, got alpha={alpha}, gamma={gamma}"
        )
    r = math.sqrt(alpha * gamma)
    u = x / (2.0 * r)
    return 2.0 * r ** (d + 1) * (cheb_t(d + 1, u) - cheb_t(d - 1, u))


def class_ii_characters(d: int, alpha: float, gamma: float) -> CharacterTable:
    """Closed-form class-II character table.

    Row i (2 <= i <= d) evaluates r^{i-2}/gamma^{i-1} *
    ((x^2 - 2 alpha gamma) U_{i-2}(u) - r x U_{i-3}(u)) with
    r = sqrt(alpha gamma), u = x/(2r), at each eigenvalue.
    """
    xs = class_ii_eigs(d, alpha, gamma)
    r = math.sqrt(alpha * gamma)
    vals = np.empty((d + 1, d + 1))
    vals[0] = 1.0
    vals[1] = xs
    for i in range(2, d + 1):
        pref = r ** (i - 2) / gamma ** (i - 1)
        for j, x in enumerate(xs):
            u = x / (2.0 * r)
            vals[i, j] = pref * (
                (x * x - 2.0 * alpha * gamma) * cheb_u(i - 2, u)
                - r * x * cheb_u(i - 3, u)
            )
    return CharacterTable(vals)
