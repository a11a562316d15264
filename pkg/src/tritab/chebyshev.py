"""Chebyshev polynomials of the first and second kind.

Recurrence evaluation (f_k = 2x f_{k-1} - f_{k-2}) is the primary path and
is valid for every real x.  The trigonometric closed forms

    T_n(cos t) = cos(n t),      U_n(cos t) = sin((n+1) t) / sin(t)

are exposed separately; they only make sense on [-1, 1] and serve as an
independent oracle for the recurrence in the tests.

Index conventions: T is defined for n >= 0; U additionally admits n = -1
with U_{-1} = 0, which the character closed forms rely on (their trailing
term must vanish at the first row they cover).
"""

from __future__ import annotations

import math


def cheb_t(n: int, x: float) -> float:
    """First-kind Chebyshev polynomial T_n(x), n >= 0."""
    if n < 0:
        raise ValueError(f"T_n requires n >= 0, got {n}")
    if n == 0:
        return 1.0
    prev, cur = 1.0, float(x)
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_u(n: int, x: float) -> float:
    """Second-kind Chebyshev polynomial U_n(x), n >= -1 (U_{-1} = 0)."""
    if n < -1:
        raise ValueError(f"U_n requires n >= -1, got {n}")
    if n == -1:
        return 0.0
    if n == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * float(x)
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_t_trig(n: int, x: float) -> float:
    """T_n via cos(n arccos x); the test oracle, defined only on [-1, 1]."""
    if n < 0:
        raise ValueError(f"T_n requires n >= 0, got {n}")
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"trigonometric form needs x in [-1, 1], got {x}")
    return math.cos(n * math.acos(x))


def cheb_u_trig(n: int, x: float) -> float:
    """U_n via sin((n+1) arccos x)/sin(arccos x), defined only on [-1, 1].

    The removable singularities at x = +-1 are handled by the closed values
    U_n(1) = n+1 and U_n(-1) = (-1)^n (n+1).
    """
    if n < -1:
        raise ValueError(f"U_n requires n >= -1, got {n}")
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"trigonometric form needs x in [-1, 1], got {x}")
    if n == -1:
        return 0.0
    if x == 1.0:
        return float(n + 1)
    if x == -1.0:
        return float((-1) ** n * (n + 1))
    t = math.acos(x)
    return math.sin((n + 1) * t) / math.sin(t)


def verify_tu_identity(n: int, x: float, tol: float = 1e-10) -> bool:
    """Check U_n(x) - U_{n-2}(x) = 2 T_n(x) at a point, n >= 2.

    Returns True when the residual is within tol * (1 + |T_n(x)|).
    """
    if n < 2:
        raise ValueError(f"identity check requires n >= 2, got {n}")
    tn = cheb_t(n, x)
    resid = abs(cheb_u(n, x) - cheb_u(n - 2, x) - 2.0 * tn)
    return resid <= tol * (1.0 + abs(tn))
