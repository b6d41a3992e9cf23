"""Extended-precision forward recurrences used as ground truth.

Values are ``mpmath.mpf`` numbers ("XpReal") at a configurable number of
decimal digits.  The default comes from ``ORTHOASYM_ORACLE_DIGITS`` (40 if
unset).
"""

from __future__ import annotations

import math
import os
import warnings

import mpmath as mp

from ..errors import AccuracyWarning, DomainError
from ..report import EvalReport

MIN_DIGITS = 30
MAX_DEGREE = 100_000


def default_digits() -> int:
    raw = os.environ.get("ORTHOASYM_ORACLE_DIGITS", "40")
    try:
        d = int(raw)
    except ValueError as exc:
        raise DomainError(f"ORTHOASYM_ORACLE_DIGITS must be an integer, got {raw!r}") from exc
    return max(d, MIN_DIGITS)


def _lag(n: int, alpha, x):
    a = mp.mpf(alpha)
    z = mp.mpf(x)
    l0 = mp.mpf(1)
    if n == 0:
        return l0
    l1 = 1 + a - z
    for k in range(1, n):
        l0, l1 = l1, ((2 * k + a + 1 - z) * l1 - (k + a) * l0) / (k + 1)
    return l1


def _jac(n: int, alpha, beta, x):
    a = mp.mpf(alpha)
    b = mp.mpf(beta)
    z = mp.mpf(x)
    p0 = mp.mpf(1)
    if n == 0:
        return p0
    p1 = (a - b) / 2 + (a + b + 2) * z / 2
    ab2 = a * a - b * b
    for k in range(1, n):
        s = 2 * k + a + b
        c1 = 2 * (k + 1) * (k + a + b + 1) * s
        c2 = (s + 1) * ab2
        c3 = s * (s + 1) * (s + 2)
        c4 = 2 * (k + a) * (k + b) * (s + 2)
        p0, p1 = p1, ((c2 + c3 * z) * p1 - c4 * p0) / c1
    return p1


def _run(family: str, n: int, alpha, beta, x):
    if family == "laguerre":
        return _lag(n, alpha, x)
    if family == "jacobi":
        return _jac(n, alpha, beta, x)
    raise DomainError(f"unknown family {family!r}")


def xp_recurrence_eval(family: str, n: int, alpha, beta, x, digits: int | None = None, check: bool = True):
    """P_n at ``x`` by forward recurrence entirely in extended precision.

    With ``check`` the recurrence is repeated with 10 more digits; if the two
    runs disagree by more than 10^-(D-10) an :class:`AccuracyWarning` is
    issued.  Inputs are taken as exact binary values.
    """
    if n < 0 or int(n) != n:
        raise DomainError("degree must be a non-negative integer")
    if n > MAX_DEGREE:
        raise DomainError(f"oracle degree guard: n={n} > {MAX_DEGREE}")
    D = default_digits() if digits is None else int(digits)
    if D < MIN_DIGITS:
        raise DomainError(f"oracle needs at least {MIN_DIGITS} digits")
    with mp.workdps(D):
        val = _run(family, int(n), alpha, beta, x)
    if check:
        with mp.workdps(D + 10):
            ref = _run(family, int(n), alpha, beta, x)
            if ref != 0:
                drift = abs((val - ref) / ref)
                if drift > mp.mpf(10) ** (-(D - 10)):
                    warnings.warn(
                        f"oracle precision exhausted: relative drift {mp.nstr(drift, 3)} at D={D}",
                        AccuracyWarning,
                        stacklevel=2,
                    )
    return val


def xp_laguerre(n: int, alpha, x, digits: int | None = None, check: bool = False):
    return xp_recurrence_eval("laguerre", n, alpha, 0, x, digits, check)


def xp_jacobi(n: int, alpha, beta, x, digits: int | None = None, check: bool = False):
    return xp_recurrence_eval("jacobi", n, alpha, beta, x, digits, check)


def to_mp(value) -> mp.mpf:
    """An EvalReport or float as an mpf, without overflow."""
    if isinstance(value, EvalReport):
        return mp.mpf(value.mantissa) * mp.exp(mp.mpf(value.log_scale))
    return mp.mpf(value)


def rel_error(value, ref, scale=None) -> float:
    """|value - ref| / scale (default |ref|), with value a float or EvalReport."""
    with mp.workdps(40):
        v = to_mp(value)
        s = abs(mp.mpf(ref)) if scale is None else abs(mp.mpf(scale))
        if s == 0:
            return math.inf if v != 0 else 0.0
        return float(abs(v - ref) / s)


def laguerre_frequency(n: int, alpha: float, z: float) -> float:
    """Local angular frequency of e^{-z/2} z^{alpha/2} L_n^(alpha)(z); 0 outside the oscillatory range."""
    kappa = n + 0.5 * (alpha + 1.0)
    w2 = kappa / z - 0.25 - (alpha * alpha - 1.0) / (4.0 * z * z)
    return math.sqrt(w2) if w2 > 0 else 0.0


def laguerre_envelope(n: int, alpha: float, z: float, digits: int = 40):
    """Local amplitude of L_n^(alpha) at z.

    The maximum of |u| with u = e^{-z/2} z^{(alpha+1)/2} L over z, z +- h,
    z +- 2h (h a quarter of the local period), converted back to the scale
    of L at z.  Weighting first matters: L itself grows like e^{z/2}, and an
    unweighted maximum would be dominated by the right-most sample.  h is
    capped at half the Airy length (4 kappa)^{1/3} so the neighbourhood does
    not reach into the monotonic range near a turning point.  Outside the
    oscillatory range the pointwise value is returned.
    """
    w = laguerre_frequency(n, alpha, z)
    with mp.workdps(digits):
        centre = abs(xp_laguerre(n, alpha, z, digits))
        if w == 0.0:
            return centre
        kappa = n + 0.5 * (alpha + 1.0)
        h = min(0.25 * math.pi / w, 0.5 * (4.0 * kappa) ** (1.0 / 3.0))
        vals = [centre]
        zc = mp.mpf(z)
        for k in (-2, -1, 1, 2):
            zz = zc + k * h
            if zz > 0:
                weight = mp.exp(-(zz - zc) / 2) * (zz / zc) ** ((alpha + 1) / 2)
                vals.append(abs(xp_laguerre(n, alpha, zz, digits)) * weight)
        return max(vals)


def jacobi_envelope(n: int, alpha: float, beta: float, theta: float, digits: int = 40):
    """Same as :func:`laguerre_envelope` in the angle variable (h = pi / (4 kappa))."""
    kappa = n + 0.5 * (alpha + beta + 1.0)
    with mp.workdps(digits):
        centre = abs(xp_jacobi(n, alpha, beta, mp.cos(theta), digits))
        h = 0.25 * math.pi / kappa
        vals = [centre]
        for k in (-2, -1, 1, 2):
            t = theta + k * h
            if 0.0 < t < math.pi:
                vals.append(abs(xp_jacobi(n, alpha, beta, mp.cos(t), digits)))
        return max(vals)
