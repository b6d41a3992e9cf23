"""Bessel functions J_nu(z) of real order and argument.

Five methods plus a dispatcher:

power series, Debye (monotonic z < nu and oscillatory z > nu), Hankel,
leading-order Airy-type near z = nu, and Miller's backward recurrence.

Each method has a private form returning ``(value, relative error estimate)``
which the dispatcher uses to decide whether to accept the result.
"""

from __future__ import annotations

import enum
import math
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from ..config import DEFAULT_BESSEL, BesselConfig
from ..errors import AccuracyWarning, DomainError, TurningPointError
from .airy import airy_ai_scaled

_EPS = 2.220446049250313e-16
_LN_HALF_2PI = 0.5 * math.log(2.0 * math.pi)
_CBRT2 = 2.0 ** (1.0 / 3.0)


class BesselMethod(str, enum.Enum):
    POWER_SERIES = "PowerSeries"
    DEBYE_MONOTONIC = "DebyeMonotonic"
    DEBYE_OSCILLATORY = "DebyeOscillatory"
    HANKEL = "Hankel"
    AIRY_TYPE = "AiryType"
    MILLER = "Miller"
    EXACT = "Exact"


class BesselResult(NamedTuple):
    value: float
    method: BesselMethod
    error_estimate: float
    ok: bool


def _check(nu: float, z: float) -> None:
    if not (nu >= 0.0 and math.isfinite(nu)):
        raise DomainError(f"Bessel order must be finite and >= 0, got {nu!r}")
    if not (z >= 0.0 and math.isfinite(z)):
        raise DomainError(f"Bessel argument must be finite and >= 0, got {z!r}")


# --------------------------------------------------------------------------
# power series


def _series(nu: float, z: float, kmax: int = 500) -> tuple[float, float]:
    if z == 0.0:
        return (1.0 if nu == 0.0 else 0.0), 0.0
    lead = nu * math.log(0.5 * z) - math.lgamma(nu + 1.0)
    q = 0.25 * z * z
    term = 1.0
    acc = 1.0
    absacc = 1.0
    for k in range(1, kmax + 1):
        term *= -q / (k * (nu + k))
        acc += term
        absacc += abs(term)
        if abs(term) < 0.5 * _EPS * abs(acc):
            break
    if acc == 0.0:
        return 0.0, math.inf
    pref = math.exp(lead)
    return pref * acc, _EPS * (absacc / abs(acc) + k)


def bessel_j_series(nu: float, z: float, K: int = 500) -> float:
    """Power series for J_nu(z), at most ``K`` terms after the first."""
    _check(nu, z)
    return _series(nu, z, K)[0]


# --------------------------------------------------------------------------
# Debye


@lru_cache(maxsize=None)
def debye_u_polynomials(kmax: int = 8) -> tuple[tuple[Fraction, ...], ...]:
    """Exact coefficients of U_0..U_kmax; entry j of row k multiplies p^j."""
    if kmax < 0:
        raise DomainError("kmax must be >= 0")
    rows = [(Fraction(1),)]
    for _ in range(kmax):
        u = rows[-1]
        deg = len(u) - 1
        out = [Fraction(0)] * (deg + 4)
        # 1/2 p^2 (1 - p^2) U'
        for j in range(1, deg + 1):
            c = u[j] * j / 2
            out[j + 1] += c
            out[j + 3] -= c
        # 1/8 int_0^p (1 - 5 t^2) U(t) dt
        for j in range(deg + 1):
            out[j + 1] += u[j] / (8 * (j + 1))
            out[j + 3] -= 5 * u[j] / (8 * (j + 3))
        rows.append(tuple(out))
    return tuple(rows)


@lru_cache(maxsize=None)
def _u_float(kmax: int) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(float(c) for c in row) for row in debye_u_polynomials(kmax))


@lru_cache(maxsize=None)
def _v_float(kmax: int) -> tuple[tuple[float, ...], ...]:
    # U_k(i c) with the factor i removed for odd k: coefficient of c^j gets
    # (-1)^floor(j/2)
    return tuple(
        tuple(float(c) * (-1.0 if (j // 2) % 2 else 1.0) for j, c in enumerate(row))
        for row in debye_u_polynomials(kmax)
    )


def _poly(coeffs, p: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * p + c
    return acc


def _debye(nu: float, z: float, K: int) -> tuple[float, float, BesselMethod]:
    K = min(K, 8)
    x = z / nu
    if x < 1.0:
        th = math.sqrt((1.0 - x) * (1.0 + x))  # tanh(alpha)
        a = math.log((1.0 + th) / x)  # alpha, since sech(alpha) = x
        p = 1.0 / th
        rows = _u_float(K)
        acc = 0.0
        last = 0.0
        inv = 1.0
        for k in range(K + 1):
            last = _poly(rows[k], p) * inv
            acc += last
            inv /= nu
        # exp(nu (tanh a - a)); tanh a - a = -(th^3/3 + th^5/5 + ...) handled by atanh
        expo = nu * (th - a) - _LN_HALF_2PI - 0.5 * math.log(nu * th)
        return math.exp(expo) * acc, abs(last / acc), BesselMethod.DEBYE_MONOTONIC
    tb = math.sqrt((x - 1.0) * (x + 1.0))  # tan(beta)
    b = math.atan(tb)
    c = 1.0 / tb
    xi = nu * (tb - b) - 0.25 * math.pi
    rows = _v_float(K)
    even = odd = 0.0
    last = 0.0
    inv = 1.0
    for k in range(K + 1):
        last = _poly(rows[k], c) * inv
        if k % 2:
            odd += last
        else:
            even += last
        inv /= nu
    amp = math.sqrt(2.0 / (math.pi * nu * tb))
    val = amp * (math.cos(xi) * even + math.sin(xi) * odd)
    env = amp * math.hypot(even, odd)
    return val, abs(amp * last) / env, BesselMethod.DEBYE_OSCILLATORY


def bessel_j_debye(nu: float, z: float, K: int = 8, gap: float = 0.2) -> float:
    """Debye expansion with U_0..U_K (K <= 8).

    The sech form is used below the turning point (z < nu) and the sec form
    above it; ``|z/nu - 1| < gap`` raises :class:`TurningPointError`.
    """
    _check(nu, z)
    if nu == 0.0 or abs(z / nu - 1.0) < gap:
        raise TurningPointError(f"Debye expansion too close to z = nu (nu={nu}, z={z})")
    return _debye(nu, z, K)[0]


# --------------------------------------------------------------------------
# Hankel


def hankel_coefficients(nu: float, kmax: int) -> list[float]:
    """a_0(nu) .. a_kmax(nu)."""
    mu = 4.0 * nu * nu
    out = [1.0]
    for k in range(1, kmax + 1):
        out.append(out[-1] * (mu - (2 * k - 1) ** 2) / (8.0 * k))
    return out


def _hankel(nu: float, z: float, K: int = 60) -> tuple[float, float]:
    a = hankel_coefficients(nu, K)
    p = q = 0.0
    term_prev = math.inf
    smallest = math.inf
    zk = 1.0
    for k in range(K + 1):
        t = a[k] / zk
        at = abs(t)
        if at > term_prev and k > 1:
            break
        if t == 0.0:
            smallest = 0.0
            break
        # (-1)^{floor(k/2)}
        s = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q += s * t
        else:
            p += s * t
        smallest = at
        if at < 0.1 * _EPS * max(abs(p), 1e-300):
            break
        term_prev = at
        zk *= z
    # omega = z - phi with phi = (nu/2 + 1/4) pi; reduce phi exactly in units of pi
    phi = math.fmod(0.5 * nu + 0.25, 2.0) * math.pi
    cz, sz = math.cos(z), math.sin(z)
    cw = cz * math.cos(phi) + sz * math.sin(phi)
    sw = sz * math.cos(phi) - cz * math.sin(phi)
    amp = math.sqrt(2.0 / (math.pi * z))
    val = amp * (cw * p - sw * q)
    env = math.hypot(p, q)
    return val, smallest / env + 4.0 * _EPS


def bessel_j_hankel(nu: float, z: float, K: int = 60) -> float:
    """Hankel large-argument expansion, truncated at the smallest term."""
    _check(nu, z)
    if z == 0.0:
        raise DomainError("Hankel expansion needs z > 0")
    val, err = _hankel(nu, z, K)
    if err > 1e-13:
        warnings.warn(
            f"Hankel expansion smallest term {err:.1e} at nu={nu}, z={z}", AccuracyWarning, stacklevel=2
        )
    return val


# --------------------------------------------------------------------------
# Airy-type (leading order)


def bessel_airy_zeta(x: float) -> float:
    """zeta(x) with zeta > 0 for x < 1 and zeta < 0 for x > 1."""
    if x <= 0.0:
        raise DomainError("zeta(x) needs x > 0")
    if x == 1.0:
        return 0.0
    if x < 1.0:
        s = math.sqrt((1.0 - x) * (1.0 + x))
        if s < 0.1:
            # atanh(s) - s without cancellation
            s2 = s * s
            acc, term, j = 0.0, s * s2, 3
            while term > 1e-18 * acc or j == 3:
                acc += term / j
                term *= s2
                j += 2
            h = acc
        else:
            h = math.atanh(s) - s
        return (1.5 * h) ** (2.0 / 3.0)
    t = math.sqrt((x - 1.0) * (x + 1.0))
    if t < 0.1:
        t2 = t * t
        acc, term, j, sgn = 0.0, t * t2, 3, 1.0
        while term > 1e-18 * abs(acc) or j == 3:
            acc += sgn * term / j
            term *= t2
            j += 2
            sgn = -sgn
        h = acc
    else:
        h = t - math.atan(t)
    return -((1.5 * h) ** (2.0 / 3.0))


def bessel_airy_phi(x: float, zeta: float | None = None) -> float:
    """phi(zeta) = (4 zeta / (1 - x^2))^{1/4}, with phi = 2^{1/3} at x = 1."""
    if zeta is None:
        zeta = bessel_airy_zeta(x)
    if x == 1.0:
        return _CBRT2
    return (4.0 * zeta / ((1.0 - x) * (1.0 + x))) ** 0.25


def _airy_type(nu: float, z: float) -> tuple[float, float]:
    x = z / nu
    zeta = bessel_airy_zeta(x)
    phi = bessel_airy_phi(x, zeta)
    t = nu ** (2.0 / 3.0) * zeta
    ai = airy_ai_scaled(t).ai
    if t > 0.0:
        ai *= math.exp(-2.0 / 3.0 * t**1.5)
    # next term is O(nu^{-4/3}) relative to the Ai term
    return phi * ai / nu ** (1.0 / 3.0), 1.0 / nu


def bessel_j_airy(nu: float, z: float, band: float = 0.2) -> float:
    """Leading-order Airy-type approximation near the turning point z = nu."""
    _check(nu, z)
    if nu == 0.0 or abs(z / nu - 1.0) > band:
        raise DomainError(f"Airy-type form needs z/nu within {band} of 1")
    return _airy_type(nu, z)[0]


# --------------------------------------------------------------------------
# Miller


def miller_start(nu: float, z: float) -> int:
    """Number of orders above ``nu`` at which the backward recurrence starts.

    The floor is ``max(20, ceil(1.3 z) + 15)``.  It is raised until a forward
    run of the dominant solution from ``max(nu, z)`` has grown by 1e10, which
    bounds the Miller error by roughly the square of the inverse growth.
    """
    floor = max(20, math.ceil(1.3 * z) + 15)
    if z == 0.0:
        return floor
    k = max(nu, z) + 1.0
    y_prev, y = 0.0, 1.0
    steps = 0
    while abs(y) < 1e10 and steps < 100_000:
        y_prev, y = y, 2.0 * k / z * y - y_prev
        k += 1.0
        steps += 1
    need = math.ceil(k - nu) + 10
    return max(floor, need)


def _miller(nu: float, z: float) -> tuple[float, float]:
    """(J_nu, J_{nu+1}) by backward recurrence; nu > -2 allowed."""
    if z <= 0.0:
        raise DomainError("Miller recurrence needs z > 0")
    m = math.floor(nu)
    nu0 = nu - m
    top = m + miller_start(nu, z)
    low = min(0, m)
    big = 1e200
    f_hi, f = 0.0, 1e-300  # orders j+1, j with j = top
    j = top
    norm = 0.0
    jt = jt1 = None
    two_over_z = 2.0 / z
    # coefficient of J_{nu0+2k} in the normalization sum: (nu0+2k)(nu0+1)_{k-1}/k!
    # computed on the fly from the top as a ratio is awkward, so use logs once
    ln_poch_base = math.lgamma(nu0 + 1.0)

    def weight(j: int) -> float:
        k = j // 2
        if k == 0:
            return 1.0
        return (nu0 + 2 * k) * math.exp(math.lgamma(nu0 + k) - ln_poch_base - math.lgamma(k + 1.0))

    while True:
        if j == m + 1:
            jt1 = f
        if j == m:
            jt = f
        if j >= 0 and j % 2 == 0:
            norm += weight(j) * f
        if j == low:
            break
        f_lo = two_over_z * (nu0 + j) * f - f_hi
        f_hi, f = f, f_lo
        j -= 1
        if abs(f) > big:
            f_hi /= big
            f /= big
            norm /= big
            if jt is not None:
                jt /= big
            if jt1 is not None:
                jt1 /= big
    # (z/2)^{nu0} / Gamma(nu0 + 1) = norm_true
    target = math.exp(nu0 * math.log(0.5 * z) - ln_poch_base)
    scale = target / norm
    return jt * scale, jt1 * scale


def bessel_j_miller(nu: float, z: float) -> float:
    """Miller's backward recurrence, normalized with the Neumann sum."""
    _check(nu, z)
    if z == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    return _miller(nu, z)[0]


# --------------------------------------------------------------------------
# dispatcher


def bessel_j_eval(nu: float, z: float, config: BesselConfig = DEFAULT_BESSEL, budget: int | None = None) -> BesselResult:
    """J_nu(z) with the method used and an error estimate."""
    _check(nu, z)
    cfg = config
    if z == 0.0:
        return BesselResult(1.0 if nu == 0.0 else 0.0, BesselMethod.EXACT, 0.0, True)
    if z <= cfg.series_z_max:
        val, err = _series(nu, z)
        if err <= cfg.series_tol:
            return BesselResult(val, BesselMethod.POWER_SERIES, err, True)
    if z >= max(cfg.hankel_z_min, cfg.hankel_nu2_factor * nu * nu + cfg.hankel_offset):
        val, err = _hankel(nu, z)
        if err <= 1e-15:
            return BesselResult(val, BesselMethod.HANKEL, err, True)
    if nu >= cfg.debye_nu_min and abs(z / nu - 1.0) >= cfg.debye_gap:
        val, err, meth = _debye(nu, z, cfg.term_count)
        if err <= cfg.debye_tol:
            return BesselResult(val, meth, err, True)
    budget = cfg.miller_budget if budget is None else budget
    steps = nu + miller_start(nu, z)
    if steps > budget:
        if nu >= cfg.airy_nu_min and abs(z / nu - 1.0) <= cfg.airy_band:
            val, err = _airy_type(nu, z)
            return BesselResult(val, BesselMethod.AIRY_TYPE, err, err <= 1e-12)
        warnings.warn(f"no Bessel method within budget for nu={nu}, z={z}", AccuracyWarning, stacklevel=2)
    val = _miller(nu, z)[0]
    return BesselResult(val, BesselMethod.MILLER, _EPS * math.sqrt(steps), True)


def bessel_j(nu: float, z: float, budget: int | None = None, config: BesselConfig = DEFAULT_BESSEL) -> float:
    """J_nu(z) for real nu >= 0 and z >= 0."""
    return bessel_j_eval(nu, z, config, budget).value


def bessel_j_signed(nu: float, z: float, config: BesselConfig = DEFAULT_BESSEL) -> float:
    """J_nu(z) for nu > -2, used internally where parameters may be in (-2, 0)."""
    if nu >= 0.0:
        return bessel_j_eval(nu, z, config).value
    if nu <= -2.0:
        raise DomainError(f"order {nu} below the supported range")
    if z == 0.0:
        raise DomainError("negative non-integer order is singular at z = 0")
    m = math.ceil(-nu)
    hi = bessel_j_eval(nu + m + 1, z, config).value
    cur = bessel_j_eval(nu + m, z, config).value
    for j in range(m, 0, -1):
        order = nu + j
        hi, cur = cur, 2.0 * order / z * cur - hi
    return cur


def bessel_j_pair(nu: float, z: float, config: BesselConfig = DEFAULT_BESSEL) -> tuple[float, float]:
    """(J_nu(z), J_{nu+1}(z)) for nu > -2."""
    if nu >= 0.0 and z > 0.0:
        first = bessel_j_eval(nu, z, config)
        if first.method is BesselMethod.MILLER:
            return _miller(nu, z)
        return first.value, bessel_j_eval(nu + 1.0, z, config).value
    return bessel_j_signed(nu, z, config), bessel_j_signed(nu + 1.0, z, config)


def bessel_j_derivative(nu: float, z: float, config: BesselConfig = DEFAULT_BESSEL) -> tuple[float, float]:
    """(J_nu(z), J_nu'(z)) from J' = (nu/z) J_nu - J_{nu+1}."""
    j0, j1 = bessel_j_pair(nu, z, config)
    return j0, nu / z * j0 - j1
