"""Expansion of P_n^(alpha,beta)(cos theta) in elementary functions, valid
away from theta = 0 and theta = pi:

    P = G_kappa / sqrt(pi kappa) * (cos chi U - sin chi V)
        / (sin^{alpha+1/2}(theta/2) cos^{beta+1/2}(theta/2))

with chi = kappa theta - (alpha/2 + 1/4) pi, U = 1 + u_2/kappa^2 and
V = v_1/kappa.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..report import EvalReport, from_log
from .gkappa import log_g_kappa
from .query import JacobiQuery


_SPLIT = 134217729.0  # 2^27 + 1
_PI_LO = 1.2246467991473532e-16  # pi - float(pi)
# smallest |value| / local amplitude credited in the error estimate
VALUE_FLOOR = 0.3


class ElementaryFrame(NamedTuple):
    kappa: float
    chi: float  # reduced to (-pi, pi]
    v1: float
    u2: float


def jacobi_elementary_coeffs(alpha: float, beta: float, x: float, sin_theta: float) -> tuple[float, float]:
    """(v_1, u_2) at x = cos theta."""
    a2, b2 = alpha * alpha, beta * beta
    v1 = (2.0 * (a2 - b2) + (2.0 * (a2 + b2) - 1.0) * x) / (8.0 * sin_theta)
    lin = 12.0 * (5.0 - 2.0 * a2 - 2.0 * b2) * (a2 - b2)
    # the constant part carries 12 (a^2 + b^2); with 3 (a^2 + b^2) the
    # coefficient disagrees with the extended-precision fit except at a = b = 0
    odd = alpha * (a2 - 1.0 + 3.0 * b2)
    const = -3.0 * (a2 - b2) ** 2 + 12.0 * (a2 + b2) - 6.0 + 4.0 * odd
    quad = -12.0 * (a2 + b2) * (a2 + b2 - 1.0) - 16.0 * odd - 3.0
    u2 = (lin * x + 4.0 * const + quad * x * x) / (384.0 * sin_theta**2)
    return v1, u2


def _two_prod(a: float, b: float) -> tuple[float, float]:
    # p + e == a * b exactly (Dekker)
    p = a * b
    t = _SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def reduced_phase(kappa: float, theta: float, alpha: float) -> float:
    """kappa theta - (alpha/2 + 1/4) pi mod 2 pi, without the rounding of
    the large product; swapping alpha, beta at pi - theta then agrees to the
    precision of theta itself."""
    c = 0.5 * alpha + 0.25
    p, e = _two_prod(kappa, theta)
    s, f = _two_prod(c, math.pi)
    k = round((p - s) / (2.0 * math.pi))
    kh, ke = _two_prod(2.0 * k, math.pi)
    return math.fsum((p, e, -s, -f, -c * _PI_LO, -kh, -ke, -2.0 * k * _PI_LO))


def elementary_frame(q: JacobiQuery) -> ElementaryFrame:
    kappa = q.n + 0.5 * (q.alpha + q.beta + 1.0)
    chi = reduced_phase(kappa, q.theta, q.alpha)
    v1, u2 = jacobi_elementary_coeffs(q.alpha, q.beta, q.x, q.sin_theta)
    return ElementaryFrame(kappa, chi, v1, u2)


def elementary_eval(q: JacobiQuery, theta_min: float = 0.3, param_bound: float = 5.0) -> EvalReport:
    fr = elementary_frame(q)
    kappa = fr.kappa
    valid = (
        theta_min <= q.theta <= math.pi - theta_min
        and abs(q.alpha) <= param_bound
        and abs(q.beta) <= param_bound
        and q.n >= 1
    )
    if not (0.0 < q.theta < math.pi):
        return EvalReport(math.nan, method="elementary", valid=False, error_estimate=math.inf, region="endpoint")
    big_u = 1.0 + fr.u2 / kappa**2
    big_v = fr.v1 / kappa
    core = math.cos(fr.chi) * big_u - math.sin(fr.chi) * big_v
    log_pref = (
        log_g_kappa(q.alpha, q.beta, kappa)
        - 0.5 * math.log(math.pi * kappa)
        - (q.alpha + 0.5) * math.log(q.s_half)
        - (q.beta + 0.5) * math.log(q.c_half)
    )
    # v_3 / kappa^3 is the first omitted term; |u_2|^{3/2} tracks its size and
    # its 1/sin^3 growth toward the endpoints, the last term covers points
    # where u_2 happens to be small (weights fitted to oracle runs)
    gen = 0.02 * (1.0 + q.alpha**2 + q.beta**2) ** 1.5 / q.sin_theta**3
    est = (3.0 * abs(fr.u2) ** 1.5 + abs(fr.v1) ** 3 + gen) / kappa**3 + 1e-15
    # near a zero the error relative to the value exceeds the one relative to
    # the amplitude; ratios such as the identity tests see the former
    est /= max(abs(core) / math.hypot(big_u, big_v), VALUE_FLOOR)
    if core == 0.0:
        return EvalReport(0.0, method="elementary", error_estimate=est, valid=valid, region="oscillatory")
    return from_log(core, log_pref + math.log(abs(core)), method="elementary", error_estimate=est, valid=valid, region="oscillatory")


def jacobi_elementary_eval(
    n: int, alpha: float, beta: float, theta: float, theta_min: float = 0.3, param_bound: float = 5.0
) -> EvalReport:
    """Elementary expansion at ``theta``; ``valid`` is false outside [theta_min, pi - theta_min]."""
    return elementary_eval(JacobiQuery.from_theta(n, alpha, beta, theta), theta_min, param_bound)
