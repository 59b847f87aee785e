"""Bracketing and bisection helpers shared by the solvers."""

from __future__ import annotations

import math

from .errors import BracketError

__all__ = ["bisect", "sign_change_brackets"]


def bisect(f, a: float, b: float, *, xtol: float, maxiter: int = 200) -> float:
    """Bisection root of f on [a, b]; endpoints must straddle a sign change.

    NaN values of f inside the interval are treated as bracket failures.
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.isnan(fa) or math.isnan(fb) or (fa < 0.0) == (fb < 0.0):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]: f(a)={fa!r}, f(b)={fb!r}")
    for _ in range(maxiter):
        m = 0.5 * (a + b)
        if m == a or m == b or (b - a) <= xtol:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if math.isnan(fm):
            raise BracketError(f"f returned NaN at {m!r} during bisection")
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def sign_change_brackets(f, a: float, b: float, n: int):
    """Scan f on an n-point uniform grid over [a, b]; return the sub-intervals
    where the sign flips.  Grid nodes where f is NaN are skipped, so a NaN
    region simply contributes no brackets."""
    if not (b > a) or n < 2:
        raise BracketError(f"bad scan interval [{a!r}, {b!r}] with {n} points")
    h = (b - a) / (n - 1)
    out = []
    x_prev = None
    f_prev = None
    for i in range(n):
        x = a + i * h
        fx = f(x)
        if math.isnan(fx):
            x_prev, f_prev = None, None
            continue
        if f_prev is not None:
            if fx == 0.0:
                out.append((x, x))
            elif (f_prev < 0.0) != (fx < 0.0):
                out.append((x_prev, x))
        x_prev, f_prev = x, fx
    return out
