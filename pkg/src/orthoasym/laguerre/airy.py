"""Airy-type expansion of L_n^(alpha)(nu x), nu = 4 kappa, around the turning
point x = 1.

    L = (-1)^n e^{nu x/2} chi(zeta) / (2^alpha nu^{1/3})
        * (Ai(nu^{2/3} zeta) A + nu^{-4/3} Ai'(nu^{2/3} zeta) B)

with A = 1 + alpha_2 / nu^2 and B = beta_1.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ..errors import DomainError
from ..report import EvalReport, from_log
from ..specfun.airy import airy_ai_scaled

_LN2 = math.log(2.0)
# zeta / (x - 1) at x = 1
_ZETA_SLOPE_AT_1 = 2.0 ** (-2.0 / 3.0)
# half-width of the gap around x = 1 where alpha_2, beta_1 are interpolated
_GAP = 0.02
_GAP_NODES = tuple(_GAP * (1.0 + 0.5 * k) for k in range(7))


class AiryZeta(NamedTuple):
    zeta: float
    chi: float
    u: float
    v: float
    phase: float  # 2/3 |zeta|^{3/2}


def _odd_tail(y: float, sign: float) -> float:
    """y - sin y (sign=-1) or sinh y - y (sign=+1) for small y, by series."""
    y2 = y * y
    term = y * y2 / 6.0
    acc = 0.0
    k = 1
    while abs(term) > 1e-18 * abs(acc) or k == 1:
        acc += term
        term *= sign * y2 / ((2 * k + 2) * (2 * k + 3))
        k += 1
        if k > 40:
            break
    return acc


def _phase(x: float) -> float:
    """2/3 |zeta|^{3/2} as a function of x."""
    if x <= 1.0:
        # x = cos^2(phi/2); 2/3 (-zeta)^{3/2} = (phi - sin phi) / 4
        phi = 2.0 * math.asin(math.sqrt(1.0 - x))
        h = _odd_tail(phi, -1.0) if phi < 0.5 else phi - math.sin(phi)
    else:
        # x = cosh^2(psi/2); 2/3 zeta^{3/2} = (sinh psi - psi) / 4
        psi = 2.0 * math.asinh(math.sqrt(x - 1.0))
        h = _odd_tail(psi, 1.0) if psi < 0.5 else math.sinh(psi) - psi
    return 0.25 * h


def laguerre_airy_zeta(x: float, alpha: float = 0.0) -> AiryZeta:
    """zeta(x) (negative for x < 1), chi(zeta) and the coefficient variables u, v."""
    if not x > 0.0:
        raise DomainError(f"Airy-type Laguerre variable needs x > 0, got {x!r}")
    ph = _phase(x)
    mag = (1.5 * ph) ** (2.0 / 3.0)
    zeta = -mag if x < 1.0 else mag
    ratio = zeta / (x - 1.0) if x != 1.0 else _ZETA_SLOPE_AT_1
    chi = math.sqrt(2.0) * x ** (-0.25 - 0.5 * alpha) * ratio**0.25
    if x <= 1.0:
        u = math.sqrt(1.0 / x - 1.0)
    else:
        u = math.sqrt(1.0 - 1.0 / x)
    v = 2.0 * math.sqrt(mag)
    return AiryZeta(zeta, chi, u, v, ph)


def _coeffs_direct(x: float, alpha: float) -> tuple[float, float]:
    fr = laguerre_airy_zeta(x, alpha)
    u, v = fr.u, fr.v
    mu = 0.5 * (alpha - 1.0)
    u2, u3, u4 = u * u, u**3, u**4
    u5, u6, u7, u8 = u**5, u**6, u**7, u**8
    v3, v4, v6 = v**3, v**4, v**6
    m2, m3, m4 = mu * mu, mu**3, mu**4
    if x <= 1.0:
        num = (
            4608 * u8 * v6 * m3 + 2016 * v6 * u8 * m2 + 2304 * u8 * v6 * m4
            - 672 * v6 * u4 * m2 - 192 * v6 * mu * u6 + 2880 * v6 * u6 * m2 + 2688 * v3 * u7 * m2
            - 288 * v6 * mu * u8 + 3072 * u6 * v6 * m3 - 672 * v6 * mu * u4 + 2688 * v3 * mu * u7
            + 924 * v6 * u2 + 558 * v6 * u4 - 180 * u6 * v6 - 135 * v6 * u8 + 504 * u7 * v3 + 336 * v3 * u5
            + 280 * u3 * v3 - 7280 * u6 + 385 * v6
        )
        a2 = -num / (1152.0 * v6 * u6)
        b1 = (48 * v3 * u4 * m2 + 9 * v3 * u4 + 48 * v3 * mu * u4 - 20 * u3 + 6 * v3 * u2 + 5 * v3) / (
            12.0 * u3 * v4
        )
    else:
        num = (
            4608 * u8 * v6 * m3 + 2016 * v6 * u8 * m2
            + 2304 * u8 * v6 * m4 - 672 * v6 * u4 * m2 + 192 * v6 * mu * u6
            - 2880 * v6 * u6 * m2 - 336 * v3 * u5 - 288 * v6 * mu * u8 - 3072 * u6 * v6 * m3
            - 672 * v6 * mu * u4 + 280 * u3 * v3 - 924 * v6 * u2 + 558 * v6 * u4 + 180 * u6 * v6
            - 135 * v6 * u8 + 2688 * v3 * u7 * m2 + 504 * u7 * v3 + 2688 * v3 * mu * u7
            - 7280 * u6 + 385 * v6
        )
        a2 = num / (1152.0 * u6 * v6)
        b1 = (48 * v3 * u4 * m2 + 9 * v3 * u4 + 48 * v3 * mu * u4 - 20 * u3 - 6 * v3 * u2 + 5 * v3) / (
            12.0 * u3 * v4
        )
    return a2, b1


@lru_cache(maxsize=256)
def _gap_fit(alpha: float):
    # alpha_2 and beta_1 are analytic at x = 1 but the explicit forms cancel
    # there; fit a polynomial through nodes on both sides of the gap
    xs = [1.0 - d for d in _GAP_NODES] + [1.0 + d for d in _GAP_NODES]
    vals = [_coeffs_direct(x, alpha) for x in xs]
    t = np.array(xs) - 1.0
    deg = len(xs) - 1
    fa = np.polynomial.Polynomial.fit(t, [v[0] for v in vals], deg)
    fb = np.polynomial.Polynomial.fit(t, [v[1] for v in vals], deg)
    return fa, fb


def laguerre_airy_coeffs(x: float, alpha: float) -> tuple[float, float]:
    """(alpha_2, beta_1) at scaled x, with the branch chosen by x <= 1."""
    if abs(x - 1.0) < _GAP:
        fa, fb = _gap_fit(float(alpha))
        return float(fa(x - 1.0)), float(fb(x - 1.0))
    return _coeffs_direct(x, alpha)


def laguerre_airy_eval(n: int, alpha: float, z: float, x_min: float = 0.35, alpha_bound: float = 5.0) -> EvalReport:
    """Airy-type expansion at the polynomial argument ``z`` (x = z / (4 kappa))."""
    kappa = n + 0.5 * (alpha + 1.0)
    nu = 4.0 * kappa
    x = z / nu
    valid = x >= x_min and abs(alpha) <= alpha_bound and n >= 1
    if not x > 0.0:
        return EvalReport(math.nan, method="airy", valid=False, error_estimate=math.inf, region="outside")
    fr = laguerre_airy_zeta(x, alpha)
    a2, b1 = laguerre_airy_coeffs(x, alpha)
    t = nu ** (2.0 / 3.0) * fr.zeta
    xi = nu * fr.phase
    pair = airy_ai_scaled(t, xi)
    big_a = 1.0 + a2 / nu**2
    b_term = nu ** (-4.0 / 3.0) * pair.aip * b1
    core = pair.ai * big_a + b_term
    log_pref = 0.5 * nu * x + math.log(fr.chi) - alpha * _LN2 - math.log(nu) / 3.0
    if t > 0.0:
        log_pref -= xi
    sign = -1.0 if n % 2 else 1.0
    # envelope of the Airy part for the error proxy
    env = abs(pair.ai) + abs(pair.aip) / math.sqrt(max(1.0, -t)) if t < 0 else abs(pair.ai)
    env = max(env, abs(core), 1e-300)
    # first omitted terms are alpha_4/nu^4 and beta_3/nu^2 in the B part;
    # products of the included corrections miss them where alpha_2 is small,
    # so add the (1 + mu^2)^5 / nu^3 size seen in oracle runs
    d_a = abs(a2) / nu**2
    d_b = abs(b_term) / env
    mu = 0.5 * (alpha - 1.0)
    est = d_a * d_a + d_a * d_b + (1.0 + mu * mu) ** 5 / nu**3 + 1e-15
    if core == 0.0:
        return EvalReport(0.0, method="airy", error_estimate=est, valid=valid, region="turning-point")
    region = "oscillatory" if x < 1.0 else "monotonic"
    return from_log(sign * core, log_pref + math.log(abs(core)), method="airy", error_estimate=est, valid=valid, region=region)
