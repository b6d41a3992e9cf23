"""Leading-order elementary expansion for large alpha and beta:

    P = 2^{(alpha+beta+1)/2} e^{-kappa psi} / sqrt(pi kappa w(x) U(x)) cos(kappa chi + pi/4)

between the turning points x_-, x_+.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..errors import DomainError
from ..report import EvalReport, from_log


class LargeABFrame(NamedTuple):
    kappa: float
    sigma: float
    tau: float
    psi: float
    chi: float
    u: float
    x_minus: float
    x_plus: float


def large_ab_turning_points(sigma: float, tau: float) -> tuple[float, float]:
    """(x_-, x_+) = -sigma tau -+ sqrt((1 - sigma^2)(1 - tau^2))."""
    root = math.sqrt((1.0 - sigma * sigma) * (1.0 - tau * tau))
    return -sigma * tau - root, -sigma * tau + root


def _xlogx(t: float) -> float:
    return 0.0 if t == 0.0 else t * math.log(t)


def large_ab_psi(sigma: float, tau: float) -> float:
    return 0.5 * (
        -_xlogx(1.0 - tau) - _xlogx(1.0 + tau) + _xlogx(1.0 + sigma) + _xlogx(1.0 - sigma)
    )


def large_ab_u2(x: float, sigma: float, tau: float) -> float:
    """U(x)^2, written as (x_+ - x)(x - x_-) to avoid cancellation near the turning points."""
    xm, xp = large_ab_turning_points(sigma, tau)
    return (xp - x) * (x - xm)


def large_ab_chi(x: float, sigma: float, tau: float, u: float) -> float:
    return (
        (tau + 1.0) * math.atan(u / (1.0 - x + sigma + tau))
        + (tau - 1.0) * math.atan(u / (1.0 + x + sigma - tau))
        + (1.0 - sigma) * math.atan2(-u, tau + x * sigma)
    )


def large_ab_frame(n: int, alpha: float, beta: float, x: float) -> LargeABFrame:
    kappa = n + 0.5 * (alpha + beta + 1.0)
    sigma = (alpha + beta) / (2.0 * kappa)
    tau = (alpha - beta) / (2.0 * kappa)
    xm, xp = large_ab_turning_points(sigma, tau)
    u2 = large_ab_u2(x, sigma, tau)
    if not u2 > 0.0:
        raise DomainError(f"x={x!r} is outside the turning points ({xm:.6g}, {xp:.6g})")
    u = math.sqrt(u2)
    return LargeABFrame(kappa, sigma, tau, large_ab_psi(sigma, tau), large_ab_chi(x, sigma, tau, u), u, xm, xp)


def jacobi_large_ab_eval(
    n: int, alpha: float, beta: float, x: float, ab_min: float = 10.0, delta: float = 0.05
) -> EvalReport:
    """Leading-order large-(alpha, beta) expansion; ``valid`` only well inside the turning points."""
    kappa = n + 0.5 * (alpha + beta + 1.0)
    sigma = (alpha + beta) / (2.0 * kappa)
    tau = (alpha - beta) / (2.0 * kappa)
    if not (abs(sigma) < 1.0 and abs(tau) < 1.0 and -1.0 < x < 1.0):
        return EvalReport(math.nan, method="large-ab", valid=False, error_estimate=math.inf, region="outside")
    xm, xp = large_ab_turning_points(sigma, tau)
    margin = 0.5 * delta * (xp - xm)
    if not xm < x < xp:
        return EvalReport(math.nan, method="large-ab", valid=False, error_estimate=math.inf, region="monotonic")
    fr = large_ab_frame(n, alpha, beta, x)
    valid = alpha >= ab_min and beta >= ab_min and n >= 1 and xm + margin <= x <= xp - margin
    log_w = alpha * math.log1p(-x) + beta * math.log1p(x)
    log_pref = (
        0.5 * (alpha + beta + 1.0) * math.log(2.0)
        - kappa * fr.psi
        - 0.5 * (math.log(math.pi * kappa) + log_w + math.log(fr.u))
    )
    core = math.cos(kappa * fr.chi + 0.25 * math.pi)
    # omitted p_1 / kappa; it grows like U^{-3} toward the turning points
    est = 1.0 / (kappa * fr.u**3) + 1e-15
    if core == 0.0:
        return EvalReport(0.0, method="large-ab", error_estimate=est, valid=valid, region="oscillatory")
    return from_log(core, log_pref + math.log(abs(core)), method="large-ab", error_estimate=est, valid=valid, region="oscillatory")
