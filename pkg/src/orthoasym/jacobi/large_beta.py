"""Large-beta expansion in Laguerre polynomials, valid close to x = 1:

    P_n^(alpha,beta)(1 - 2z/b) = (1 - z/b)^n (L_n^(alpha)(z) R + L_{n-1}^(alpha)(z) S)

with b = beta + n, R = 1 + r_1/b + r_2/b^2 and S = s_1/b + s_2/b^2.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..laguerre.recurrence import laguerre_recurrence_scaled
from ..report import EvalReport, from_log, scaled_ratio


class LargeBetaFrame(NamedTuple):
    b: float
    z: float
    r: tuple[float, float, float]
    s: tuple[float, float, float]


def large_beta_coeffs(n: int, alpha: float, z: float) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    """((r_0, r_1, r_2), (s_0, s_1, s_2))."""
    a = alpha
    r1 = 0.5 * n * (2.0 * z + a + 1.0)
    s1 = -0.5 * (n + a) * (a + z + 1.0)
    # r_2 carries a factor n; without it the 1/b^2 term disagrees with the
    # extended-precision expansion and the order in b drops to 2
    r2 = -n * (
        3 * a**3 + 6 * a**2 * z - 6 * a * n * z + 3 * a * z**2 - 9 * n * z**2
        + 10 * a**2 + 8 * a * z - 4 * n * z - 12 * z**2 + 9 * a + 2
    ) / 24.0
    s2 = (n + a) * (
        3 * a**3 + 3 * a**2 * z - 6 * a * n * z - 3 * a * z**2 - 6 * n * z**2
        - 3 * z**3 + 10 * a**2 + a * z - 4 * n * z - 11 * z**2 + 9 * a - 2 * z + 2
    ) / 24.0
    return (1.0, r1, r2), (0.0, s1, s2)


def large_beta_frame(n: int, alpha: float, beta: float, z: float) -> LargeBetaFrame:
    r, s = large_beta_coeffs(n, alpha, z)
    return LargeBetaFrame(beta + n, z, r, s)


def large_beta_z(n: int, beta: float, one_minus_x: float) -> float:
    """z with x = 1 - 2z/b."""
    return 0.5 * (beta + n) * one_minus_x


def jacobi_large_beta_eval(
    n: int,
    alpha: float,
    beta: float,
    z: float,
    beta_min: float = 100.0,
    n_max: int = 110,
    x_min: float = 0.994,
) -> EvalReport:
    """Large-beta expansion at z (x = 1 - 2z/(beta+n)); refused outside x in (x_min, 1)."""
    fr = large_beta_frame(n, alpha, beta, z)
    b = fr.b
    x_ok = 0.0 < z and 2.0 * z / b < 1.0 - x_min
    valid = beta >= beta_min and n <= n_max and n >= 1 and x_ok and z < beta
    if not (0.0 <= z < b):
        return EvalReport(math.nan, method="large-beta", valid=False, error_estimate=math.inf, region="outside")
    r0, r1, r2 = fr.r
    _, s1, s2 = fr.s
    big_r = r0 + r1 / b + r2 / b**2
    big_s = s1 / b + s2 / b**2
    ln = laguerre_recurrence_scaled(n, alpha, z)
    if n == 0:
        return EvalReport(1.0, method="large-beta", valid=valid, region="near-endpoint")
    lm = laguerre_recurrence_scaled(n - 1, alpha, z)
    if ln.mantissa == 0.0:
        base, ratio, big_r, big_s = lm, 0.0, 0.0, big_s
        core = big_s
    else:
        base = ln
        ratio = scaled_ratio(lm, ln)
        core = big_r + ratio * big_s
    # third-order terms scale like the second-order ones times (n + z + alpha) / b
    growth = (n + z + abs(alpha) + 1.0) / b
    env = abs(big_r) + abs(ratio * big_s)
    est = growth * (abs(r2) + abs(ratio * s2)) / b**2 / max(env, 1e-300) + 1e-15
    log_pref = n * math.log1p(-z / b) + base.log_abs
    if core == 0.0 or base.mantissa == 0.0:
        return EvalReport(0.0, method="large-beta", error_estimate=est, valid=valid, region="near-endpoint")
    sign = core * base.sign
    return from_log(sign, log_pref + math.log(abs(core)), method="large-beta", error_estimate=est, valid=valid, region="near-endpoint")
