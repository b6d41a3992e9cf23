"""Evaluation points for Jacobi polynomials and the reflection x -> -x."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError


@dataclass(frozen=True)
class JacobiQuery:
    """P_n^(alpha,beta) at x = cos(theta).

    The half-angle factors sin(theta/2), cos(theta/2) and sin(theta) are kept
    alongside x and theta so that 1 -+ x never has to be formed by
    subtraction near the endpoints.
    """

    n: int
    alpha: float
    beta: float
    x: float
    theta: float
    s_half: float
    c_half: float

    @classmethod
    def from_x(cls, n: int, alpha: float, beta: float, x: float) -> JacobiQuery:
        if not -1.0 <= x <= 1.0:
            raise DomainError(f"x must lie in [-1, 1], got {x!r}")
        s_half = math.sqrt(0.5 * (1.0 - x))
        c_half = math.sqrt(0.5 * (1.0 + x))
        return cls(int(n), alpha, beta, x, 2.0 * math.atan2(s_half, c_half), s_half, c_half)

    @classmethod
    def from_theta(cls, n: int, alpha: float, beta: float, theta: float) -> JacobiQuery:
        if not 0.0 <= theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
        return cls(int(n), alpha, beta, math.cos(theta), theta, math.sin(0.5 * theta), math.cos(0.5 * theta))

    @property
    def sin_theta(self) -> float:
        return 2.0 * self.s_half * self.c_half

    @property
    def one_minus_x(self) -> float:
        return 2.0 * self.s_half * self.s_half

    @property
    def one_plus_x(self) -> float:
        return 2.0 * self.c_half * self.c_half


def jacobi_symmetry(q: JacobiQuery) -> tuple[JacobiQuery, int]:
    """(query with alpha, beta swapped at -x, sign (-1)^n); an involution."""
    sign = -1 if q.n % 2 else 1
    # pi - theta from the half angles keeps full relative accuracy near 0
    theta = 2.0 * math.atan2(q.c_half, q.s_half)
    flipped = JacobiQuery(q.n, q.beta, q.alpha, -q.x, theta, q.c_half, q.s_half)
    return flipped, sign
