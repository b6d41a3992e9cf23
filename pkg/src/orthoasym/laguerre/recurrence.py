"""Forward three-term recurrence for Laguerre polynomials."""

from __future__ import annotations

import math

from ..errors import DomainError
from ..report import EvalReport

_BIG = 1e150


def _check(n: int, alpha: float, x: float) -> None:
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    if not (math.isfinite(alpha) and math.isfinite(x)):
        raise DomainError("parameters must be finite")


def laguerre_recurrence_scaled(n: int, alpha: float, x: float) -> EvalReport:
    """L_n^(alpha)(x) as ``mantissa * exp(log_scale)``; never overflows."""
    _check(n, alpha, x)
    n = int(n)
    if n == 0:
        return EvalReport(1.0, method="recurrence")
    l0, l1 = 1.0, 1.0 + alpha - x
    log_scale = 0.0
    for k in range(1, n):
        l0, l1 = l1, ((2 * k + alpha + 1 - x) * l1 - (k + alpha) * l0) / (k + 1)
        if abs(l1) > _BIG:
            l0 /= _BIG
            l1 /= _BIG
            log_scale += math.log(_BIG)
    return EvalReport(l1, log_scale, method="recurrence").normalized()


def laguerre_recurrence(n: int, alpha: float, x: float) -> float:
    """L_n^(alpha)(x) by forward recurrence; OverflowError if it leaves double range."""
    r = laguerre_recurrence_scaled(n, alpha, x)
    v = r.value
    if math.isinf(v):
        raise OverflowError(f"L_{n}^({alpha})({x}) exceeds double range (log|L| = {r.log_abs:.1f})")
    return v
