"""Method selection for P_n^(alpha,beta)(x)."""

from __future__ import annotations

import math
from dataclasses import replace

from ..config import DEFAULT_POLICY, EvalPolicy
from ..errors import DomainError
from ..report import EvalReport
from .bessel import bessel_eval
from .elementary import elementary_eval
from .large_ab import jacobi_large_ab_eval
from .large_beta import jacobi_large_beta_eval, large_beta_z
from .query import JacobiQuery, jacobi_symmetry
from .recurrence import jacobi_recurrence_scaled

JACOBI_METHODS = ("recurrence", "elementary", "bessel", "large-beta", "large-ab")


def make_query(
    n: int, alpha: float, beta: float, x: float | None = None, theta: float | None = None, param_min: float = -1.0
) -> JacobiQuery:
    """Validate and build a query from exactly one of ``x`` and ``theta``.

    ``param_min`` may be lowered to -2 for the shifted parameters that the
    identity tests need; the polynomials stay well defined there.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    if not (alpha > param_min and beta > param_min):
        raise DomainError(f"alpha and beta must exceed {param_min}, got {alpha!r}, {beta!r}")
    if (x is None) == (theta is None):
        raise DomainError("give exactly one of x and theta")
    if x is not None:
        return JacobiQuery.from_x(n, alpha, beta, float(x))
    return JacobiQuery.from_theta(n, alpha, beta, float(theta))


def _flip(r: EvalReport, sign: int) -> EvalReport:
    return r if sign == 1 else replace(r, mantissa=-r.mantissa)


def _recurrence(q: JacobiQuery) -> EvalReport:
    return jacobi_recurrence_scaled(q.n, q.alpha, q.beta, q.x)


def jacobi_method(method: str, q: JacobiQuery, policy: EvalPolicy = DEFAULT_POLICY) -> EvalReport:
    """Run one named method.

    ``bessel`` reflects to the near endpoint when theta > pi/2 and
    ``large-beta`` reflects so that the large parameter is beta.
    ``elementary`` is run in the orientation with x >= 0: the truncated
    expansion is not exactly invariant under the swap, and a fixed
    orientation makes the method satisfy the symmetry to rounding.
    """
    cfg = policy.jacobi
    if method == "recurrence":
        return _recurrence(q)
    if method == "elementary":
        flip = q.x < 0.0 or (q.x == 0.0 and q.alpha > q.beta)
        qq, sign = jacobi_symmetry(q) if flip else (q, 1)
        return _flip(elementary_eval(qq, cfg.elementary_theta_min, cfg.param_bound), sign)
    if method == "bessel":
        qq, sign = jacobi_symmetry(q) if q.theta > 0.5 * math.pi else (q, 1)
        r = bessel_eval(qq, cfg.bessel_theta_max, cfg.param_bound, cfg.bessel_a2_correction, policy.bessel)
        return _flip(r, sign)
    if method == "large-beta":
        qq, sign = jacobi_symmetry(q) if q.alpha > q.beta else (q, 1)
        z = large_beta_z(qq.n, qq.beta, qq.one_minus_x)
        r = jacobi_large_beta_eval(qq.n, qq.alpha, qq.beta, z, cfg.large_beta_min, cfg.large_beta_n_max, cfg.large_beta_x_min)
        return _flip(r, sign)
    if method == "large-ab":
        return jacobi_large_ab_eval(q.n, q.alpha, q.beta, q.x, cfg.large_ab_min, cfg.large_ab_delta)
    raise DomainError(f"unknown Jacobi method {method!r}; choose from {', '.join(JACOBI_METHODS)}")


def _candidates(q: JacobiQuery, policy: EvalPolicy) -> list[str]:
    cfg = policy.jacobi
    lo, hi = sorted((q.alpha, q.beta))
    order = []
    if hi >= cfg.large_beta_min and lo <= cfg.param_bound:
        order.append("large-beta")
    if lo >= cfg.large_ab_min:
        order.append("large-ab")
    if lo >= -cfg.param_bound and hi <= cfg.param_bound:
        t = cfg.elementary_theta_min
        if t <= q.theta <= math.pi - t:
            order += ["elementary", "bessel"]
        else:
            order.append("bessel")
    return order


def jacobi_eval_query(q: JacobiQuery, policy: EvalPolicy = DEFAULT_POLICY) -> EvalReport:
    if policy.method != "auto":
        return jacobi_method(policy.method, q, policy)
    if q.n < policy.jacobi.recurrence_n_max:
        return _recurrence(q)
    for name in _candidates(q, policy):
        r = jacobi_method(name, q, policy)
        if r.valid and r.error_estimate <= policy.tolerance and math.isfinite(r.mantissa):
            return r
    return _recurrence(q)


def jacobi_eval(
    n: int,
    alpha: float,
    beta: float,
    x: float | None = None,
    theta: float | None = None,
    policy: EvalPolicy = DEFAULT_POLICY,
    param_min: float = -1.0,
) -> EvalReport:
    """P_n^(alpha,beta) at ``x`` or at ``x = cos(theta)``.

    In ``auto`` mode expansions are tried in the order large-beta,
    large-(alpha, beta), elementary (preferred for speed), Bessel-type; the
    first one that is valid with an error estimate within
    ``policy.tolerance`` wins, and the forward recurrence is the fallback.
    """
    return jacobi_eval_query(make_query(n, alpha, beta, x, theta, param_min), policy)
