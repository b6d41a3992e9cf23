"""Identity tests that need no reference values.

Laguerre:  (L_{n-1}^(a+1)(z) + L_n^(a)(z)) / L_n^(a+1)(z) = 1.
Jacobi:    (P_n^(a,b-1) - P_n^(a-1,b)) / P_{n-1}^(a,b) = 1   ("difference")
       or  (P_n^(a-1,b) + P_{n-1}^(a,b)) / P_n^(a,b-1) = 1   ("sum").
The two Jacobi denominators interlace, so they never vanish together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import mpmath as mp

from ..config import DEFAULT_POLICY, EvalPolicy
from ..errors import DomainError
from ..jacobi.dispatch import jacobi_eval
from ..laguerre.dispatch import laguerre_eval
from .xp import laguerre_frequency, to_mp

# the difference form is dropped when its denominator is smaller than the
# sum form's times this ratio
SWITCH_RATIO = 1.0
NEAR_ZERO = 1e-3
# enough that an extended-precision evaluator shows its own rounding floor
WORK_DIGITS = 50

LaguerreEvaluator = Callable[[int, float, float], object]
JacobiEvaluator = Callable[[int, float, float, float], object]


@dataclass(frozen=True)
class IdentityReport:
    eps: float
    identity: str  # "laguerre", "difference" or "sum"
    near_zero: bool  # denominator small against the local envelope
    denominator: float


def default_laguerre_evaluator(policy: EvalPolicy = DEFAULT_POLICY) -> LaguerreEvaluator:
    return lambda n, a, z: laguerre_eval(n, a, z, policy)


def default_jacobi_evaluator(policy: EvalPolicy = DEFAULT_POLICY) -> JacobiEvaluator:
    # the shifted parameters a-1, b-1 may fall below -1
    return lambda n, a, b, x: jacobi_eval(n, a, b, x=x, policy=policy, param_min=-2.0)


def _eps(num, den) -> float:
    if den == 0:
        return math.inf
    return float(abs(num / den - 1))


def identity_epsilon_laguerre(
    n: int, alpha: float, z: float, evaluator: LaguerreEvaluator | None = None, envelope: float | None = None
) -> IdentityReport:
    """eps = |(L_{n-1}^(a+1) + L_n^(a)) / L_n^(a+1) - 1| at z.

    ``near_zero`` is set when |L_n^(a+1)(z)| is below 1e-3 of its local
    envelope; without an explicit ``envelope`` it is sampled with the same
    evaluator at z +- h, z +- 2h, h a quarter of the local period.
    """
    if n < 1:
        raise DomainError("the Laguerre identity needs n >= 1")
    ev = evaluator or default_laguerre_evaluator()
    with mp.workdps(WORK_DIGITS):
        first = to_mp(ev(n - 1, alpha + 1.0, z))
        second = to_mp(ev(n, alpha, z))
        den = to_mp(ev(n, alpha + 1.0, z))
        eps = _eps(first + second, den)
        if envelope is None:
            w = laguerre_frequency(n, alpha + 1.0, z)
            env = abs(den)
            if w > 0.0:
                h = 0.25 * math.pi / w
                for k in (-2, -1, 1, 2):
                    if z + k * h > 0.0:
                        env = max(env, abs(to_mp(ev(n, alpha + 1.0, z + k * h))))
        else:
            env = mp.mpf(envelope)
        near = abs(den) < NEAR_ZERO * env
        return IdentityReport(eps, "laguerre", bool(near), float(abs(den) / env) if env else 0.0)


def identity_test_jacobi(
    n: int, alpha: float, beta: float, x: float, evaluator: JacobiEvaluator | None = None
) -> IdentityReport:
    """Difference form unless its denominator P_{n-1}^(a,b) is the smaller of
    the two denominators, then the sum form."""
    if n < 1:
        raise DomainError("the Jacobi identity needs n >= 1")
    ev = evaluator or default_jacobi_evaluator()
    with mp.workdps(WORK_DIGITS):
        p_b = to_mp(ev(n, alpha, beta - 1.0, x))
        p_a = to_mp(ev(n, alpha - 1.0, beta, x))
        p_low = to_mp(ev(n - 1, alpha, beta, x))
        scale = max(abs(p_b), abs(p_low))
        if abs(p_low) >= SWITCH_RATIO * abs(p_b):
            return IdentityReport(_eps(p_b - p_a, p_low), "difference", False, float(abs(p_low) / scale))
        near = abs(p_b) < NEAR_ZERO * scale
        return IdentityReport(_eps(p_a + p_low, p_b), "sum", bool(near), float(abs(p_b) / scale) if scale else 0.0)
