"""Bounds on the interval containing all zeros of P_n^(alpha,beta)."""

from __future__ import annotations

import math
from typing import NamedTuple

from ..errors import DomainError


class ZeroBounds(NamedTuple):
    A: float
    B: float
    C: float
    lower: float
    upper: float


def jacobi_zero_bounds(n: int, alpha: float, beta: float) -> ZeroBounds:
    """[B -+ 4(n-1) sqrt(C)] / A."""
    if n < 2 or int(n) != n:
        raise DomainError(f"zero bounds need an integer degree n >= 2, got {n!r}")
    if not (alpha > -1.0 and beta > -1.0):
        raise DomainError("alpha and beta must exceed -1")
    ab = alpha + beta
    A = (2 * n + ab) * (n * (2 * n + ab) + 2.0 * (ab + 2.0))
    B = (beta - alpha) * ((ab + 6.0) * n + 2.0 * ab)
    C = n * n * (n + ab + 1.0) ** 2 + (alpha + 1.0) * (beta + 1.0) * (n * n + (ab + 4.0) * n + 2.0 * ab)
    w = 4.0 * (n - 1) * math.sqrt(C)
    return ZeroBounds(A, B, C, (B - w) / A, (B + w) / A)
