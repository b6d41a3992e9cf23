"""Airy function Ai and its derivative on the real line.

Three regimes:

* ``|t| <= 2``: Maclaurin series.
* ``2 < |t| < 9``: one Taylor step of the Airy equation from the nearest node
  of a table spaced 0.25 apart.  The table is built once; the positive half
  is integrated downwards from ``t = 9`` (the stable direction for Ai), the
  negative half outwards from ``t = 0``.
* ``|t| >= 9``: the standard asymptotic expansions, truncated at the smallest
  term (which is below ``exp(-36)`` there).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

AI0 = 0.35502805388781723926
AIP0 = -0.25881940379280679840

_SERIES_LIMIT = 2.0
_ASYMP_LIMIT = 9.0
_STEP = 0.25
_SQRT_PI = math.sqrt(math.pi)
_EPS = 1e-17


class AiryPair(NamedTuple):
    ai: float
    aip: float


def _maclaurin(t: float) -> AiryPair:
    # f = sum 3^k (1/3)_k t^{3k}/(3k)!, g = sum 3^k (2/3)_k t^{3k+1}/(3k+1)!
    t3 = t * t * t
    f = fp = 0.0
    g = gp = 0.0
    tf = 1.0  # term of f
    tg = t  # term of g
    k = 0
    while True:
        f += tf
        g += tg
        # derivatives termwise: d/dt t^{3k} = 3k t^{3k-1}
        if k > 0:
            fp += tf * 3 * k / t if t != 0.0 else 0.0
        gp += tg * (3 * k + 1) / t if t != 0.0 else (1.0 if k == 0 else 0.0)
        k += 1
        tf *= t3 / ((3 * k - 1) * (3 * k))
        tg *= t3 / ((3 * k) * (3 * k + 1))
        if abs(tf) < _EPS * (abs(f) + 1e-300) and abs(tg) < _EPS * (abs(g) + 1e-300):
            if k > 2:
                break
        if k > 200:
            break
    if t == 0.0:
        return AiryPair(AI0, AIP0)
    return AiryPair(AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp)


def _u_coeffs(kmax: int = 80) -> tuple[list[float], list[float]]:
    u = [1.0]
    v = [1.0]
    for k in range(1, kmax + 1):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k))
        v.append(-(6 * k + 1) / (6 * k - 1) * u[-1])
    return u, v


_U, _V = _u_coeffs()


def _asym_sum(coeffs, xi: float, start: int, sign_flip: bool) -> float:
    """sum_k s_k c_{start+2k} / xi^{start+2k}, stopped at the smallest term."""
    acc = 0.0
    prev = math.inf
    j = start
    k = 0
    inv = 1.0 / xi
    while j < len(coeffs):
        term = coeffs[j] * inv**j
        if sign_flip and k % 2:
            term = -term
        a = abs(term)
        if a > prev:
            break
        acc += term
        if a < _EPS * abs(acc):
            break
        prev = a
        j += 2
        k += 1
    return acc


def _alt_sum(coeffs, xi: float) -> float:
    """sum_k (-1)^k c_k / xi^k, stopped at the smallest term."""
    acc = 0.0
    prev = math.inf
    term = 1.0
    inv = -1.0 / xi
    for k, c in enumerate(coeffs):
        t = c * term
        a = abs(t)
        if a > prev:
            break
        acc += t
        if a < _EPS * abs(acc):
            break
        prev = a
        term *= inv
    return acc


def _asym_pos_scaled(t: float, xi: float) -> AiryPair:
    """Ai, Ai' times exp(xi) for large positive t."""
    q = t**0.25
    ai = _alt_sum(_U, xi) / (2.0 * _SQRT_PI * q)
    aip = -q * _alt_sum(_V, xi) / (2.0 * _SQRT_PI)
    return AiryPair(ai, aip)


def _asym_neg(s: float, xi: float) -> AiryPair:
    """Ai(-s), Ai'(-s) for large positive s."""
    q = s**0.25
    ph = xi - 0.25 * math.pi
    c, sn = math.cos(ph), math.sin(ph)
    p = _asym_sum(_U, xi, 0, True)
    qq = _asym_sum(_U, xi, 1, True)
    r = _asym_sum(_V, xi, 0, True)
    ss = _asym_sum(_V, xi, 1, True)
    ai = (c * p + sn * qq) / (_SQRT_PI * q)
    aip = q * (sn * r - c * ss) / _SQRT_PI
    return AiryPair(ai, aip)


def _taylor_step(t0: float, y: float, yp: float, h: float) -> AiryPair:
    # y'' = t y; c_{k+2} = (t0 c_k + c_{k-1}) / ((k+1)(k+2))
    c_prev2 = y  # c_{k}
    c_prev1 = yp  # c_{k+1}
    cm1 = 0.0  # c_{k-1}
    val = y + yp * h
    der = yp
    hp = h  # h^{k+1}
    k = 0
    small = 0
    while k < 80:
        c_next = (t0 * c_prev2 + cm1) / ((k + 1) * (k + 2))
        val += c_next * hp * h
        der += (k + 2) * c_next * hp
        hp *= h
        cm1, c_prev2, c_prev1 = c_prev2, c_prev1, c_next
        k += 1
        # coefficients can vanish individually (t0 = 0), so wait for three in a row
        if abs(c_next * hp) < 1e-19 * (abs(val) + abs(der)):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    return AiryPair(val, der)


@lru_cache(maxsize=1)
def _anchor_table() -> dict[int, AiryPair]:
    """Ai, Ai' at t = j * 0.25 for |t| <= 9 (keys are j)."""
    table: dict[int, AiryPair] = {0: AiryPair(AI0, AIP0)}
    jmax = int(round(_ASYMP_LIMIT / _STEP))
    # negative half, outwards from 0
    cur = AiryPair(AI0, AIP0)
    for j in range(0, -jmax, -1):
        cur = _taylor_step(j * _STEP, cur.ai, cur.aip, -_STEP)
        table[j - 1] = cur
    # positive half, inwards from the asymptotic region
    t = jmax * _STEP
    cur = _asym_pos_scaled(t, 2.0 / 3.0 * t**1.5)
    scale = math.exp(-2.0 / 3.0 * t**1.5)
    cur = AiryPair(cur.ai * scale, cur.aip * scale)
    table[jmax] = cur
    for j in range(jmax, 1, -1):
        cur = _taylor_step(j * _STEP, cur.ai, cur.aip, -_STEP)
        table[j - 1] = cur
    table[0] = AiryPair(AI0, AIP0)
    return table


def _midrange(t: float) -> AiryPair:
    j = int(round(t / _STEP))
    node = _anchor_table()[j]
    t0 = j * _STEP
    if t == t0:
        return node
    return _taylor_step(t0, node.ai, node.aip, t - t0)


def airy_ai_scaled(t: float, xi: float | None = None) -> AiryPair:
    """Ai(t), Ai'(t) multiplied by exp(2/3 t^{3/2}) when t > 0.

    ``xi`` may supply 2/3 |t|^{3/2} computed directly by the caller; for very
    large |t| this keeps the phase accurate to the caller's precision.
    """
    if t >= _ASYMP_LIMIT:
        if xi is None:
            xi = 2.0 / 3.0 * t**1.5
        return _asym_pos_scaled(t, xi)
    if t <= -_ASYMP_LIMIT:
        if xi is None:
            xi = 2.0 / 3.0 * (-t) ** 1.5
        return _asym_neg(-t, xi)
    pair = _maclaurin(t) if abs(t) <= _SERIES_LIMIT else _midrange(t)
    if t > 0.0:
        sc = math.exp(2.0 / 3.0 * t**1.5)
        return AiryPair(pair.ai * sc, pair.aip * sc)
    return pair


def airy_ai(t: float) -> AiryPair:
    """Ai(t) and Ai'(t) for real t.

    Raises FloatingPointError where Ai underflows (t above ~104); use
    :func:`airy_ai_scaled` there.
    """
    if not math.isfinite(t):
        raise FloatingPointError(f"airy_ai argument not finite: {t!r}")
    if t > 0.0:
        xi = 2.0 / 3.0 * t**1.5
        if xi > 700.0:
            raise FloatingPointError(f"Ai({t}) underflows double precision")
        pair = airy_ai_scaled(t, xi)
        sc = math.exp(-xi)
        return AiryPair(pair.ai * sc, pair.aip * sc)
    return airy_ai_scaled(t)
