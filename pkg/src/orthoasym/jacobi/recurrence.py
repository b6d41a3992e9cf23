"""Forward three-term recurrence for Jacobi polynomials."""

from __future__ import annotations

import math

from ..errors import DomainError
from ..report import EvalReport

_BIG = 1e150


def _check(n: int, x: float) -> None:
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    if not math.isfinite(x):
        raise DomainError("x must be finite")


def jacobi_recurrence_scaled(n: int, alpha: float, beta: float, x: float) -> EvalReport:
    """P_n^(alpha,beta)(x) as ``mantissa * exp(log_scale)``.

    Uses P_{k+1} = ((c2 + c3 x) P_k - c4 P_{k-1}) / c1 with
    c1 = 2(k+1)(k+a+b+1)s, c2 = (s+1)(a^2-b^2), c3 = s(s+1)(s+2),
    c4 = 2(k+a)(k+b)(s+2), s = 2k+a+b.
    """
    _check(n, x)
    n = int(n)
    if n == 0:
        return EvalReport(1.0, method="recurrence")
    a, b = alpha, beta
    p0 = 1.0
    p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x
    ab2 = (a - b) * (a + b)
    log_scale = 0.0
    for k in range(1, n):
        s = 2 * k + a + b
        c1 = 2.0 * (k + 1) * (k + a + b + 1) * s
        c2 = (s + 1) * ab2
        c3 = s * (s + 1) * (s + 2)
        c4 = 2.0 * (k + a) * (k + b) * (s + 2)
        p0, p1 = p1, ((c2 + c3 * x) * p1 - c4 * p0) / c1
        if abs(p1) > _BIG:
            p0 /= _BIG
            p1 /= _BIG
            log_scale += math.log(_BIG)
    return EvalReport(p1, log_scale, method="recurrence").normalized()


def jacobi_recurrence(n: int, alpha: float, beta: float, x: float) -> float:
    """P_n^(alpha,beta)(x); OverflowError if the value leaves double range."""
    r = jacobi_recurrence_scaled(n, alpha, beta, x)
    v = r.value
    if math.isinf(v):
        raise OverflowError(f"P_{n}^({alpha},{beta})({x}) exceeds double range")
    return v
