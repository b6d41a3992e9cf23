"""Simple Bessel-type expansion of L_n^(alpha)(x) for bounded x:

    L ~ (x/n)^{-alpha/2} e^{x/2} (J_alpha(2 sqrt(n x)) sum (-1)^k a_k(x) / n^k
                                 - sqrt(x/n) J_{alpha+1}(2 sqrt(n x)) sum (-1)^k b_k(x) / n^k)

with a_k, b_k generated by :mod:`orthoasym.serieskit`.
"""

from __future__ import annotations

import math

from ..config import DEFAULT_BESSEL, BesselConfig
from ..errors import DomainError
from ..report import EvalReport, from_log
from ..serieskit import laguerre_ab_coeffs
from ..specfun.bessel import bessel_j_pair

KMAX_LIMIT = 6
VALID_TOL = 1e-10


def laguerre_bessel_simple_eval(
    n: int,
    alpha: float,
    x: float,
    kmax: int = 4,
    nx_max: float = 30.0,
    config: BesselConfig = DEFAULT_BESSEL,
) -> EvalReport:
    """Expansion at polynomial argument ``x``, truncated after k = ``kmax``.

    The error estimate is the k = kmax + 1 term relative to the Bessel
    envelope hypot(J_alpha, sqrt(x/n) J_{alpha+1}).
    """
    if not 0 <= kmax <= KMAX_LIMIT:
        raise DomainError(f"kmax must lie in [0, {KMAX_LIMIT}], got {kmax}")
    if n < 1 or not x > 0.0 or alpha <= -1.0:
        return EvalReport(math.nan, method="bessel-simple", valid=False, error_estimate=math.inf, region="outside")
    a, b = laguerre_ab_coeffs(x, alpha, kmax + 1)
    arg = 2.0 * math.sqrt(n * x)
    j0, j1 = bessel_j_pair(alpha, arg, config)
    q = math.sqrt(x / n)
    sa = sb = 0.0
    p = 1.0
    for k in range(kmax + 1):
        sa += p * a[k]
        sb += p * b[k]
        p *= -1.0 / n
    core = j0 * sa - q * j1 * sb
    env = max(math.hypot(j0, q * j1), 1e-300)
    est = (abs(j0 * a[kmax + 1]) + abs(q * j1 * b[kmax + 1])) * abs(p) / env + 1e-16
    log_pref = -0.5 * alpha * math.log(x / n) + 0.5 * x
    valid = n * x <= nx_max and est <= VALID_TOL
    if core == 0.0:
        return EvalReport(0.0, method="bessel-simple", error_estimate=est, valid=valid, region="oscillatory")
    return from_log(core, log_pref + math.log(abs(core)), method="bessel-simple", error_estimate=est, valid=valid, region="oscillatory")
