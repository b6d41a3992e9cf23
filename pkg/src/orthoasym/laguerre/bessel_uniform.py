"""Uniform Bessel-type expansion of L_n^(alpha)(2 nu x), nu = 2n + alpha + 1:

    L = e^{nu x} chi(zeta) / (2^alpha zeta^{alpha/2})
        * (J_alpha(2 nu sqrt(zeta)) A - zeta^{-1/2} J_{alpha+1}(2 nu sqrt(zeta)) B)

with A = 1 and B = B_1(zeta) / nu, valid for x <= 1 - delta.  Note that
2 nu x = 4 kappa x, so x is the same scaled variable as in the Airy-type
expansion.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..config import DEFAULT_BESSEL, BesselConfig
from ..errors import DomainError
from ..report import EvalReport, from_log
from ..specfun.bessel import bessel_j_pair

_LN2 = math.log(2.0)


class UniformZeta(NamedTuple):
    zeta: float
    chi: float
    xi: float


def laguerre_bessel_uniform_zeta(x: float, alpha: float = 0.0) -> UniformZeta:
    """zeta(x), chi(zeta) and xi = sqrt(x / (1 - x)) for x < 1.

    For x <= 0 the modified-Bessel branch sqrt(-zeta) = (sqrt(x^2 - x) +
    arcsinh sqrt(-x)) / 2 is returned with zeta <= 0; the evaluator does not
    use it.
    """
    if not x < 1.0:
        raise DomainError(f"uniform Bessel variable needs x < 1, got {x!r}")
    if x == 0.0:
        return UniformZeta(0.0, 1.0, 0.0)
    if x < 0.0:
        root = 0.5 * (math.sqrt(x * x - x) + math.asinh(math.sqrt(-x)))
        zeta = -root * root
        xi = -math.sqrt(-x / (1.0 - x))
    else:
        root = 0.5 * (math.sqrt(x * (1.0 - x)) + math.asin(math.sqrt(x)))
        zeta = root * root
        xi = math.sqrt(x / (1.0 - x))
    chi = (1.0 - x) ** -0.25 * (zeta / x) ** (0.5 * alpha + 0.25)
    return UniformZeta(zeta, chi, xi)


def laguerre_bessel_uniform_b1(x: float, alpha: float) -> float:
    """Normalized B_1(zeta) in the xi-form; tends to (1 - alpha^2) x / 6 as x -> 0."""
    fr = laguerre_bessel_uniform_zeta(x, alpha)
    xi = fr.xi
    if xi == 0.0:
        return 0.0
    b = math.sqrt(fr.zeta)
    x2 = xi * xi
    return (5.0 * x2 * x2 * b + 6.0 * x2 * b + 3.0 * xi + 12.0 * alpha * alpha * (b - xi) - 3.0 * b) / (48.0 * xi)


def laguerre_bessel_uniform_eval(
    n: int,
    alpha: float,
    z: float,
    x_max: float = 0.85,
    alpha_bound: float = 5.0,
    config: BesselConfig = DEFAULT_BESSEL,
) -> EvalReport:
    """Uniform Bessel-type expansion at polynomial argument ``z``."""
    nu = 2.0 * n + alpha + 1.0
    x = z / (2.0 * nu)
    if n < 1 or not 0.0 < x < 1.0:
        return EvalReport(math.nan, method="bessel-uniform", valid=False, error_estimate=math.inf, region="outside")
    fr = laguerre_bessel_uniform_zeta(x, alpha)
    b1 = laguerre_bessel_uniform_b1(x, alpha)
    root = math.sqrt(fr.zeta)
    j0, j1 = bessel_j_pair(alpha, 2.0 * nu * root, config)
    b_term = j1 * b1 / (nu * root)
    core = j0 - b_term
    env = max(math.hypot(j0, j1), 1e-300)
    # first omitted term A_2 / nu^2: 8 (B_1 / nu)^2 / zeta tracks its
    # x-dependence and alpha^2 (1/2 + 2 s^2) / nu^2 its alpha-dependence,
    # s = x / (4 kappa) (both factors read off oracle runs at n = 1000, 4000)
    d = abs(b1) / (nu * root)
    s_scaled = z / (4.0 * n + 2.0 * alpha + 2.0)
    alpha_term = alpha * alpha * (0.5 + 2.0 * s_scaled * s_scaled) / (nu * nu)
    est = 8.0 * d * d + d * abs(b_term) / env + alpha_term + 1e-15
    log_pref = nu * x + math.log(fr.chi) - alpha * _LN2 - 0.5 * alpha * math.log(fr.zeta)
    valid = x <= x_max and abs(alpha) <= alpha_bound
    if core == 0.0:
        return EvalReport(0.0, method="bessel-uniform", error_estimate=est, valid=valid, region="oscillatory")
    return from_log(core, log_pref + math.log(abs(core)), method="bessel-uniform", error_estimate=est, valid=valid, region="oscillatory")
