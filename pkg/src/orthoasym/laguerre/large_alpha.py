"""Bessel-type expansion of L_n^(alpha)(4 kappa x) for large alpha and n.

    L = e^{-kappa E} chi(b) (b / (2 kappa x))^alpha Gamma(n+alpha+1)/n!
        * (J_alpha(4 kappa b) A(b) - 2 b J_alpha'(4 kappa b) B(b))

with kappa = n + (alpha+1)/2, tau = alpha / (2 kappa) and b(x) from the
implicit W-relation.  Between the turning points x1 < x2 the polynomial
oscillates; the expansion is used on [x1, (1 - delta) x2].

The exponent E(x, tau) comes without an explicit formula.  By default the
closed form below is used; it reproduces the oracle-calibrated exponent (see
:mod:`orthoasym.oracle.calibration`) up to the O(kappa^-3) signature of the
first omitted coefficient.  A calibration table can be passed instead.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple, Protocol

import numpy as np

from ..config import DEFAULT_BESSEL, BesselConfig
from ..errors import CalibrationError, DomainError
from ..report import EvalReport, from_log
from ..specfun.bessel import bessel_j_derivative
from ..specfun.gamma import ln_gamma_shift

MAX_ITER = 100
# half-width (in units of min(x1, x2 - x1)) of the gap around x1 where chi
# and B1 are interpolated: P R^3 + Q W^3 cancels like (W / tau)^-4 there
_GAP = 0.3
_GAP_NODES = tuple(_GAP * (1.0 + k / 6.0) for k in range(7))
# largest tau mismatch a calibration table may be shifted across
TABLE_TAU_TOL = 0.01


class ExponentTable(Protocol):
    tau: float

    def __call__(self, x: float) -> float: ...


class LargeAlphaFrame(NamedTuple):
    kappa: float
    tau: float
    x: float
    x1: float
    x2: float
    b: float
    chi: float
    b1: float


def large_alpha_turning_points(tau: float) -> tuple[float, float]:
    """(x1, x2) = (1 -+ sqrt(1 - tau^2)) / 2."""
    if not 0.0 < tau < 1.0:
        raise DomainError(f"tau must lie in (0, 1), got {tau!r}")
    s = math.sqrt((1.0 - tau) * (1.0 + tau))
    x1 = 0.5 * tau * tau / (1.0 + s)
    return x1, 1.0 - x1


def _rhs(x: float, tau: float, x1: float, x2: float) -> tuple[float, float]:
    """Right-hand side F of the W-relation and R, for x1 <= x <= x2.

    The arcsin terms sit at +-1 when x = x1; with
    1 - (1-2x)/s = 2(x-x1)/s and 1 + (x - tau^2/2)/(x s) = 2 x2 (x-x1)/(x s)
    they become half-angle arcsines of small arguments:
    F = 2R + 2 asin(sqrt((x-x1)/s)) - 2 tau asin(sqrt(x2 (x-x1)/(x s))).
    """
    s = x2 - x1
    d = max(x - x1, 0.0)
    r = math.sqrt(max((x2 - x) * d, 0.0))
    f = 2.0 * r + 2.0 * math.asin(min(1.0, math.sqrt(d / s))) - 2.0 * tau * math.asin(min(1.0, math.sqrt(x2 * d / (x * s))))
    return max(f, 0.0), r


def _rhs_below(x: float, tau: float, x1: float, x2: float) -> tuple[float, float]:
    """Continuation G for 0 < x < x1, where the relation reads 2 tau atanh(V/tau) - 2V = G."""
    s = x2 - x1
    d = x1 - x
    r = math.sqrt(d * (x2 - x))
    g = 2.0 * tau * math.asinh(math.sqrt(x2 * d / (x * s))) - 2.0 * math.asinh(math.sqrt(d / s)) - 2.0 * r
    return max(g, 0.0), r


def _solve(phi, dphi, lo: float, hi: float, guess: float, target: float) -> float:
    """Root of the increasing map phi(w) = target on [lo, hi], Newton safeguarded by bisection."""
    w = min(max(guess, lo), hi)
    for _ in range(MAX_ITER):
        f = phi(w) - target
        if f > 0.0:
            hi = w
        else:
            lo = w
        d = dphi(w)
        step = f / d if d > 0.0 else math.inf
        nxt = w - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - w) <= 1e-16 * max(1.0, abs(w)) or hi - lo <= 1e-16 * max(1.0, hi):
            return nxt
        w = nxt
    raise RuntimeError("W-relation solver did not converge")


def _w_above(f: float, tau: float) -> float:
    if f == 0.0:
        return 0.0
    phi = lambda w: 2.0 * w - 2.0 * tau * math.atan(w / tau)
    dphi = lambda w: 2.0 * w * w / (tau * tau + w * w)
    guess = (1.5 * tau * tau * f) ** (1.0 / 3.0) if f < 0.1 * tau else 0.5 * (f + tau * math.pi)
    return _solve(phi, dphi, 0.0, 0.5 * (f + tau * math.pi) + 1.0, guess, f)


def _w_below(g: float, tau: float) -> float:
    if g == 0.0:
        return 0.0
    phi = lambda v: 2.0 * tau * math.atanh(v / tau) - 2.0 * v
    dphi = lambda v: 2.0 * v * v / ((tau - v) * (tau + v))
    guess = (1.5 * tau * tau * g) ** (1.0 / 3.0)
    return _solve(phi, dphi, 0.0, tau * (1.0 - 1e-16), guess, g)


def laguerre_large_alpha_b(x: float, tau: float) -> tuple[float, float, float]:
    """(b, W, R) on [x1, x2] from the implicit relation."""
    x1, x2 = large_alpha_turning_points(tau)
    if not x1 <= x <= x2:
        raise DomainError(f"x={x!r} outside the oscillatory interval [{x1!r}, {x2!r}]")
    f, r = _rhs(x, tau, x1, x2)
    w = _w_above(f, tau)
    return 0.5 * math.hypot(w, tau), w, r


def _b_either_side(x: float, tau: float) -> float:
    x1, x2 = large_alpha_turning_points(tau)
    if x >= x1:
        f, _ = _rhs(x, tau, x1, x2)
        return 0.5 * math.hypot(_w_above(f, tau), tau)
    g, _ = _rhs_below(x, tau, x1, x2)
    w = _w_below(g, tau)
    return 0.5 * math.sqrt((tau - w) * (tau + w))


def w_relation_residual(x: float, tau: float, w: float) -> float:
    """LHS - RHS of the W-relation at (x, W)."""
    x1, x2 = large_alpha_turning_points(tau)
    f, _ = _rhs(x, tau, x1, x2)
    return 2.0 * w - 2.0 * tau * math.atan(w / tau) - f


def _b1(x: float, tau: float, b: float, r: float, w: float) -> float:
    p = 4.0 * (2.0 * tau * tau + 12.0 * b * b) * (1.0 - tau * tau)
    q = 2.0 * tau**4 - 12.0 * x * x * tau * tau - tau * tau - 8.0 * x**3 + 24.0 * x * x - 6.0 * x
    return (p * r**3 + q * w**3) / (192.0 * r**3 * w**4 * (tau * tau - 1.0))


def _direct(x: float, tau: float, x1: float, x2: float) -> tuple[float, float, float]:
    """(b, chi, B1) from the closed forms, on either side of x1 (not at it)."""
    if x >= x1:
        f, r = _rhs(x, tau, x1, x2)
        w = _w_above(f, tau)
        b = 0.5 * math.hypot(w, tau)
    else:
        g, r = _rhs_below(x, tau, x1, x2)
        w = _w_below(g, tau)
        b = 0.5 * math.sqrt((tau - w) * (tau + w))
    # W^2 / (4 R^2) keeps its form below x1 (both factors change sign)
    chi = math.sqrt(w / (2.0 * r))
    return b, chi, _b1(x, tau, b, r, w)


def _gap_width(x1: float, x2: float) -> float:
    return min(x1, x2 - x1)


@lru_cache(maxsize=512)
def _gap_fit(tau: float):
    x1, x2 = large_alpha_turning_points(tau)
    scale = _gap_width(x1, x2)
    ts = [-d for d in _GAP_NODES] + list(_GAP_NODES)
    vals = [_direct(x1 + t * scale, tau, x1, x2) for t in ts]
    deg = len(ts) - 1
    fchi = np.polynomial.Polynomial.fit(ts, [v[1] for v in vals], deg)
    fb1 = np.polynomial.Polynomial.fit(ts, [v[2] for v in vals], deg)
    return fchi, fb1


def large_alpha_frame(n: int, alpha: float, x: float) -> LargeAlphaFrame:
    """Mapped variables at scaled x (argument 4 kappa x); x may lie below x1."""
    kappa = n + 0.5 * (alpha + 1.0)
    tau = alpha / (2.0 * kappa)
    x1, x2 = large_alpha_turning_points(tau)
    if not 0.0 < x < x2:
        raise DomainError(f"x={x!r} outside (0, x2={x2!r})")
    scale = _gap_width(x1, x2)
    t = (x - x1) / scale
    if abs(t) < _GAP:
        fchi, fb1 = _gap_fit(tau)
        f, r = _rhs(x, tau, x1, x2) if x >= x1 else _rhs_below(x, tau, x1, x2)
        if x >= x1:
            b = 0.5 * math.hypot(_w_above(f, tau), tau)
        else:
            w = _w_below(f, tau)
            b = 0.5 * math.sqrt((tau - w) * (tau + w))
        chi, b1 = float(fchi(t)), float(fb1(t))
    else:
        b, chi, b1 = _direct(x, tau, x1, x2)
    return LargeAlphaFrame(kappa, tau, x, x1, x2, b, chi, b1)


def large_alpha_a1(tau: float) -> float:
    return tau / (24.0 * (tau * tau - 1.0))


def large_alpha_exponent(x: float, tau: float, b: float | None = None) -> float:
    """Closed-form exponent E(x, tau) in e^{-kappa E}.

    E = -2x + tau ln(b^2 / x) + tau l(tau) with
    l(tau) = -[(1-tau)/2 ln(1-tau) - (1+tau)/2 ln(1+tau) + tau] / tau.
    """
    if b is None:
        b = _b_either_side(x, tau)
    lk = -(0.5 * (1.0 - tau) * math.log1p(-tau) - 0.5 * (1.0 + tau) * math.log1p(tau) + tau) / tau
    return -2.0 * x + tau * math.log(b * b / x) + tau * lk


def _exponent(x: float, fr: LargeAlphaFrame, table: ExponentTable | None) -> float:
    analytic = large_alpha_exponent(x, fr.tau, fr.b)
    if table is None:
        return analytic
    shift = fr.tau - table.tau
    if abs(shift) > TABLE_TAU_TOL:
        raise CalibrationError(f"no exponent table for tau={fr.tau:.6g} (table has tau={table.tau:.6g})")
    if shift == 0.0:
        return float(table(x))
    # move the table to the requested tau with the closed form's tau-dependence
    return float(table(x)) + analytic - large_alpha_exponent(x, table.tau)


def laguerre_large_alpha_eval(
    n: int,
    alpha: float,
    z: float,
    delta: float = 0.05,
    tau_max: float = 0.9,
    derivative_arg: str = "b",
    exponent: ExponentTable | None = None,
    config: BesselConfig = DEFAULT_BESSEL,
) -> EvalReport:
    """Large-alpha expansion at polynomial argument ``z`` (x = z / (4 kappa)).

    ``derivative_arg`` selects 4 kappa b (default) or 4 kappa x as the argument
    of J_alpha'; the latter is kept only to document why it is wrong.
    """
    if n < 1 or alpha <= 0.0:
        return EvalReport(math.nan, method="large-alpha", valid=False, error_estimate=math.inf, region="outside")
    kappa = n + 0.5 * (alpha + 1.0)
    tau = alpha / (2.0 * kappa)
    x = z / (4.0 * kappa)
    x1, x2 = large_alpha_turning_points(tau)
    if not 0.0 < x < x2:
        return EvalReport(math.nan, method="large-alpha", valid=False, error_estimate=math.inf, region="outside")
    valid = x1 * (1.0 - 1e-12) <= x <= (1.0 - delta) * x2 and tau <= tau_max
    fr = large_alpha_frame(n, alpha, x)
    a1 = large_alpha_a1(tau)
    big_a = 1.0 + a1 / kappa
    big_b = fr.b1 / kappa + a1 * fr.b1 / kappa**2
    arg = 4.0 * kappa * fr.b
    j, jd = bessel_j_derivative(alpha, arg, config)
    if derivative_arg == "b":
        pass
    elif derivative_arg == "x":
        jd = bessel_j_derivative(alpha, 4.0 * kappa * x, config)[1]
    else:
        raise DomainError(f"derivative_arg must be 'b' or 'x', got {derivative_arg!r}")
    core = j * big_a - 2.0 * fr.b * jd * big_b
    log_pref = (
        -kappa * _exponent(x, fr, exponent)
        + math.log(fr.chi)
        + alpha * math.log(fr.b / (2.0 * kappa * x))
        + ln_gamma_shift(n + 1.0, alpha)
    )
    # first omitted terms are A_2 / kappa^2 and B_3; the factor 10 B1^2 was
    # read off oracle runs over tau in [0.05, 0.5]
    est = (10.0 * fr.b1 * fr.b1 + a1 * a1) / kappa**2 + 1e-15
    region = "oscillatory" if x >= x1 else "monotonic"
    if core == 0.0:
        return EvalReport(0.0, method="large-alpha", error_estimate=est, valid=valid, region=region)
    return from_log(core, log_pref + math.log(abs(core)), method="large-alpha", error_estimate=est, valid=valid, region=region)
