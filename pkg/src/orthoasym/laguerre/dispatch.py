"""Method selection for L_n^(alpha)(x)."""

from __future__ import annotations

import math

from ..config import DEFAULT_POLICY, EvalPolicy
from ..errors import DomainError
from ..report import EvalReport
from .airy import laguerre_airy_eval
from .bessel_simple import laguerre_bessel_simple_eval
from .bessel_uniform import laguerre_bessel_uniform_eval
from .large_alpha import ExponentTable, laguerre_large_alpha_eval, large_alpha_turning_points
from .recurrence import laguerre_recurrence_scaled

LAGUERRE_METHODS = ("recurrence", "airy", "bessel-simple", "bessel-uniform", "large-alpha")


def _check(n: int, alpha: float, x: float) -> None:
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha!r}")
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"x must be finite and non-negative, got {x!r}")


def laguerre_method(
    method: str, n: int, alpha: float, x: float, policy: EvalPolicy = DEFAULT_POLICY, exponent: ExponentTable | None = None
) -> EvalReport:
    """Run one named method with the thresholds from ``policy``."""
    cfg = policy.laguerre
    if method == "recurrence":
        return laguerre_recurrence_scaled(n, alpha, x)
    if method == "airy":
        return laguerre_airy_eval(n, alpha, x, cfg.airy_window_min, cfg.alpha_bound)
    if method == "bessel-simple":
        return laguerre_bessel_simple_eval(n, alpha, x, cfg.simple_bessel_kmax, cfg.simple_bessel_x_max, policy.bessel)
    if method == "bessel-uniform":
        return laguerre_bessel_uniform_eval(n, alpha, x, cfg.uniform_x_max, cfg.alpha_bound, policy.bessel)
    if method == "large-alpha":
        return laguerre_large_alpha_eval(
            n, alpha, x, cfg.large_alpha_delta, cfg.large_alpha_tau_max, exponent=exponent, config=policy.bessel
        )
    raise DomainError(f"unknown Laguerre method {method!r}; choose from {', '.join(LAGUERRE_METHODS)}")


def _candidates(n: int, alpha: float, x: float, policy: EvalPolicy) -> list[str]:
    cfg = policy.laguerre
    kappa = n + 0.5 * (alpha + 1.0)
    s = x / (4.0 * kappa)
    order = []
    if alpha >= cfg.large_alpha_min:
        tau = alpha / (2.0 * kappa)
        if tau < 1.0:
            x1, x2 = large_alpha_turning_points(tau)
            if x1 <= s <= (1.0 - cfg.large_alpha_delta) * x2:
                order.append("large-alpha")
    if n * x <= cfg.simple_bessel_x_max:
        order.append("bessel-simple")
    if s >= cfg.airy_x_min:
        order += ["airy", "bessel-uniform"]
    else:
        order += ["bessel-uniform", "airy"]
    return order


def laguerre_eval(
    n: int, alpha: float, x: float, policy: EvalPolicy = DEFAULT_POLICY, exponent: ExponentTable | None = None
) -> EvalReport:
    """L_n^(alpha)(x) with the method chosen by ``policy``.

    In ``auto`` mode an expansion is accepted only if it is valid at the point
    and its error estimate is within ``policy.tolerance``; otherwise the
    forward recurrence (exact up to rounding, O(n) cost) is used.
    """
    _check(n, alpha, x)
    n = int(n)
    if policy.method != "auto":
        return laguerre_method(policy.method, n, alpha, x, policy, exponent)
    if n < policy.laguerre.recurrence_n_max or x == 0.0:
        return laguerre_recurrence_scaled(n, alpha, x)
    for name in _candidates(n, alpha, x, policy):
        r = laguerre_method(name, n, alpha, x, policy, exponent)
        if r.valid and r.error_estimate <= policy.tolerance and math.isfinite(r.mantissa):
            return r
    return laguerre_recurrence_scaled(n, alpha, x)
