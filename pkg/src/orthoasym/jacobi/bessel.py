"""Bessel-type expansion of P_n^(alpha,beta)(cos theta), uniform on [0, pi - delta]:

    P = G_kappa / (sin^alpha(theta/2) cos^beta(theta/2)) sqrt(theta / sin theta)
        * (J_alpha(kappa theta) S + J_{alpha+1}(kappa theta) T / kappa)

with S = 1 and T = A_1(theta).  An optional correction adds S_1/kappa^2 and
T_1/kappa^2 built from the leading small-theta term of A_2.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..config import DEFAULT_BESSEL, BesselConfig
from ..report import EvalReport, from_log
from ..specfun.bessel import bessel_j_pair
from .gkappa import log_g_kappa
from .query import JacobiQuery

SERIES_THETA_MAX = 0.1


class BesselFrame(NamedTuple):
    kappa: float
    chi: float  # theta / sin theta
    a1: float
    a2: float  # leading small-theta term only


def small_theta_constants(alpha: float, beta: float) -> tuple[float, float, float]:
    """(A_01, A_11, A_02)."""
    a2, b2 = alpha * alpha, beta * beta
    a01 = (a2 + 3.0 * b2 - 1.0) / 24.0
    a11 = (-3.0 * a2 - 5.0 * b2 + 2.0) / 480.0
    a02 = (
        -16.0 * alpha - 14.0 * a2 - 90.0 * b2 + 5.0 * a2 * a2 + 4.0 * a2 * alpha
        + 45.0 * b2 * b2 + 30.0 * b2 * a2 + 60.0 * b2 * alpha + 21.0
    ) / 5760.0
    return a01, a11, a02


def _sin_minus_tcos(t: float) -> float:
    """sin t - t cos t without cancellation."""
    if t > 0.5:
        return math.sin(t) - t * math.cos(t)
    # sum_{k>=1} (-1)^{k+1} 2k t^{2k+1} / (2k+1)!
    t2 = t * t
    term = t * t2 / 6.0  # t^3 / 3!
    acc = 0.0
    k = 1
    while True:
        contrib = 2 * k * term
        acc += contrib
        if abs(contrib) <= 1e-17 * abs(acc):
            break
        term *= -t2 / ((2 * k + 2) * (2 * k + 3))
        k += 1
    return acc


def jacobi_bessel_a1(alpha: float, beta: float, theta: float, sin_theta: float | None = None) -> float:
    """A_1(theta); for theta <= 0.1 from chi theta (A_01 + A_11 theta^2)."""
    if sin_theta is None:
        sin_theta = math.sin(theta)
    if theta == 0.0:
        return 0.0
    if theta <= SERIES_THETA_MAX:
        a01, a11, _ = small_theta_constants(alpha, beta)
        return theta / sin_theta * theta * (a01 + a11 * theta * theta)
    one_minus_cos = 2.0 * math.sin(0.5 * theta) ** 2
    num = (4.0 * alpha**2 - 1.0) * _sin_minus_tcos(theta) - 2.0 * theta * (alpha**2 - beta**2) * one_minus_cos
    return num / (8.0 * theta * sin_theta)


def bessel_frame(q: JacobiQuery) -> BesselFrame:
    kappa = q.n + 0.5 * (q.alpha + q.beta + 1.0)
    st = q.sin_theta
    chi = q.theta / st if q.theta > 0.0 else 1.0
    a1 = jacobi_bessel_a1(q.alpha, q.beta, q.theta, st)
    a02 = small_theta_constants(q.alpha, q.beta)[2]
    a2 = (chi * q.theta) ** 2 * a02
    return BesselFrame(kappa, chi, a1, a2)


def _endpoint_log(q: JacobiQuery) -> float:
    # P(1) = Gamma(n+alpha+1) / (n! Gamma(alpha+1))
    kappa = q.n + 0.5 * (q.alpha + q.beta + 1.0)
    return log_g_kappa(q.alpha, q.beta, kappa) + q.alpha * math.log(kappa) - math.lgamma(q.alpha + 1.0)


def bessel_eval(
    q: JacobiQuery,
    theta_max: float = math.pi - 0.3,
    param_bound: float = 5.0,
    a2_correction: bool = False,
    config: BesselConfig = DEFAULT_BESSEL,
) -> EvalReport:
    valid = q.theta <= theta_max and abs(q.alpha) <= param_bound and abs(q.beta) <= param_bound and q.n >= 1
    if q.theta >= math.pi:
        return EvalReport(math.nan, method="bessel", valid=False, error_estimate=math.inf, region="endpoint")
    if q.theta == 0.0:
        sign = 1.0 if q.alpha > -1.0 or math.gamma(q.alpha + 1.0) > 0 else -1.0
        return from_log(sign, _endpoint_log(q), method="bessel", error_estimate=1e-15, valid=valid, region="endpoint")
    fr = bessel_frame(q)
    kappa = fr.kappa
    s_coef, t_coef = 1.0, fr.a1
    if a2_correction:
        s_coef -= fr.a2 / kappa**2
        t_coef += 2.0 * (q.alpha + 1.0) * fr.a2 / q.theta / kappa**2
    z = kappa * q.theta
    j0, j1 = bessel_j_pair(q.alpha, z, config)
    core = j0 * s_coef + j1 * t_coef / kappa
    log_pref = (
        log_g_kappa(q.alpha, q.beta, kappa)
        - q.alpha * math.log(q.s_half)
        - q.beta * math.log(q.c_half)
        + 0.5 * math.log(fr.chi)
    )
    # first omitted terms are S_1, T_1 (order A_2 / kappa^2); with the
    # correction the remainder is the theta^2 tail of A_2
    a2_size = abs(small_theta_constants(q.alpha, q.beta)[2]) * fr.chi**2 * q.theta**2
    if a2_correction:
        a2_size *= q.theta**2
    est = 2.0 * (a2_size + 0.5 * fr.a1**2) / kappa**2 + 1e-15
    region = "oscillatory" if z > abs(q.alpha) + 1.0 else "near-endpoint"
    if core == 0.0:
        return EvalReport(0.0, method="bessel", error_estimate=est, valid=valid, region=region)
    return from_log(core, log_pref + math.log(abs(core)), method="bessel", error_estimate=est, valid=valid, region=region)


def jacobi_bessel_eval(
    n: int,
    alpha: float,
    beta: float,
    theta: float,
    theta_max: float = math.pi - 0.3,
    param_bound: float = 5.0,
    a2_correction: bool = False,
    config: BesselConfig = DEFAULT_BESSEL,
) -> EvalReport:
    """Bessel-type expansion at ``theta``; use the reflection for theta near pi."""
    return bessel_eval(JacobiQuery.from_theta(n, alpha, beta, theta), theta_max, param_bound, a2_correction, config)
