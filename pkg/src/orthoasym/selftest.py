"""Invariant suite behind ``orthoasym selftest``.

Each property returns (ok, detail).  The quick subset avoids the slower
oracle sweeps and the calibration run.
"""

from __future__ import annotations

import math
import random
from typing import Callable

import mpmath as mp

from .errors import CalibrationError
from .jacobi import jacobi_bessel_eval, jacobi_eval, jacobi_zero_bounds
from .laguerre import laguerre_eval, large_alpha_exponent
from .oracle import (
    calibrate_exponent,
    identity_epsilon_laguerre,
    identity_test_jacobi,
    jacobi_envelope,
    laguerre_envelope,
    load_calibration,
    table_from_json,
    to_mp,
    xp_jacobi,
    xp_laguerre,
)
from .serieskit import laguerre_ck_coeffs
from .specfun import airy_ai, bessel_j, ln_gamma_ratio

Result = tuple[bool, str]
# calibrated and closed-form exponents differ by the expansion's truncation
# error divided by kappa, far below this
CALIBRATION_TOL = 1e-5


def _bessel_half_integer() -> Result:
    worst = 0.0
    for z in (0.3, 2.0, 17.5, 60.0, 250.0):
        ref = math.sqrt(2.0 / (math.pi * z)) * math.sin(z)
        worst = max(worst, abs(bessel_j(0.5, z) - ref) / math.sqrt(2.0 / (math.pi * z)))
    return worst <= 1e-13, f"max error {worst:.2g}"


def _airy_values() -> Result:
    # relative error where Ai decays, absolute where it oscillates
    worst = 0.0
    with mp.workdps(30):
        for t in (-8.0, -1.5, 0.0, 2.5, 9.0):
            ref = float(mp.airyai(t))
            err = abs(airy_ai(t).ai - ref)
            worst = max(worst, err / abs(ref) if t > 0 else err)
    return worst <= 1e-12, f"max error {worst:.2g}"


def _gamma_ratio() -> Result:
    worst = 0.0
    with mp.workdps(30):
        for a, b in ((10.5, 10.0), (1000.25, 1000.0), (3.0, 2.0)):
            ref = float(mp.loggamma(a) - mp.loggamma(b))
            worst = max(worst, abs(ln_gamma_ratio(a, b) - ref))
    return worst <= 1e-13, f"max error {worst:.2g}"


def _series_coeffs() -> Result:
    c = laguerre_ck_coeffs(1.0, 0.0, 4)
    err = max(abs(c[1] - 5.0 / 12.0), abs(c[2] - 13.0 / 288.0))
    return err <= 1e-15, f"c_1, c_2 error {err:.2g}"


def _laguerre_small() -> Result:
    ok = laguerre_eval(0, 0.5, 1.2).value == 1.0
    v = laguerre_eval(1, 0.5, 1.2).value
    ok = ok and abs(v - 0.3) <= 1e-15
    return ok, f"L_1 = {v!r}"


def _laguerre_airy_point() -> Result:
    n, alpha = 1000, 1.0 / 3.0
    z = 4.0 * (n + 0.5 * (alpha + 1.0))  # turning point
    r = laguerre_eval(n, alpha, z)
    with mp.workdps(40):
        err = float(abs(to_mp(r) - xp_laguerre(n, alpha, z)) / laguerre_envelope(n, alpha, z))
    return err <= 1e-9, f"{r.method}, error {err:.2g}"


def _jacobi_small() -> Result:
    v = jacobi_eval(1, 1.0 / 3.0, 0.25, x=0.0).value
    return abs(v - (1.0 / 3.0 - 0.25) / 2.0) <= 1e-15, f"P_1(0) = {v!r}"


def _jacobi_elementary_point() -> Result:
    n, a, b, th = 500, 1.0 / 3.0, 0.25, 1.0
    r = jacobi_eval(n, a, b, theta=th)
    with mp.workdps(40):
        err = float(abs(to_mp(r) - xp_jacobi(n, a, b, mp.cos(th))) / jacobi_envelope(n, a, b, th))
    return err <= 1e-9 and r.method == "elementary", f"{r.method}, error {err:.2g}"


def _jacobi_endpoint() -> Result:
    n, a, b = 1000, 1.0 / 3.0, 0.2
    r = jacobi_bessel_eval(n, a, b, 0.0)
    ref = math.exp(math.lgamma(n + a + 1.0) - math.lgamma(n + 1.0) - math.lgamma(a + 1.0))
    err = abs(r.value - ref) / ref
    return err <= 1e-12, f"relative error {err:.2g}"


def _zero_bounds() -> Result:
    zb = jacobi_zero_bounds(2, 0.0, 0.0)
    err = max(abs(zb.lower + 1 / math.sqrt(3.0)), abs(zb.upper - 1 / math.sqrt(3.0)))
    return err <= 1e-15, f"Legendre n=2 error {err:.2g}"


def _identities(count: int) -> Callable[[], Result]:
    def run() -> Result:
        rng = random.Random(7)
        worst = 0.0
        for i in range(count):
            n = rng.randint(70, 2000)
            a, b = rng.uniform(-0.9, 5.0), rng.uniform(-0.9, 5.0)
            if i % 2:
                worst = max(worst, identity_test_jacobi(n, a, b, math.cos(rng.uniform(0.05, 3.09))).eps)
            else:
                z = 4.0 * (n + 0.5 * (a + 1.0)) * rng.uniform(0.01, 1.2)
                rep = identity_epsilon_laguerre(n, a, z)
                if not rep.near_zero:
                    worst = max(worst, rep.eps)
        return worst <= 1e-9, f"{count} cases, max eps {worst:.2g}"

    run.__name__ = f"identities_{count}"
    return run


def check_calibration_table(table) -> Result:
    worst = 0.0
    xs = [p[0] for p in table.nodes]
    for k in range(len(xs) - 1):
        x = 0.5 * (xs[k] + xs[k + 1])
        worst = max(worst, abs(table(x) - large_alpha_exponent(x, table.tau)))
    return worst <= CALIBRATION_TOL, f"tau={table.tau:.4g}, max deviation from closed form {worst:.2g}"


def _calibration(path: str | None) -> Callable[[], Result]:
    def run() -> Result:
        try:
            if path is not None:
                table = load_calibration(path)
            else:
                table = calibrate_exponent(0.226, check=False)
                table = table_from_json(table.to_json())
        except (OSError, CalibrationError) as exc:
            return False, f"cannot use table: {exc}"
        return check_calibration_table(table)

    return run


def run_selftest(quick: bool = False, calibration: str | None = None) -> list[tuple[str, bool, str]]:
    props: list[tuple[str, Callable[[], Result]]] = [
        ("specfun.bessel_half_integer", _bessel_half_integer),
        ("specfun.airy_values", _airy_values),
        ("specfun.gamma_ratio", _gamma_ratio),
        ("serieskit.c_coefficients", _series_coeffs),
        ("laguerre.small_degree", _laguerre_small),
        ("laguerre.turning_point", _laguerre_airy_point),
        ("jacobi.small_degree", _jacobi_small),
        ("jacobi.elementary", _jacobi_elementary_point),
        ("jacobi.endpoint", _jacobi_endpoint),
        ("jacobi.zero_bounds", _zero_bounds),
        ("oracle.identities", _identities(6 if quick else 60)),
    ]
    if calibration is not None or not quick:
        props.append(("oracle.calibration", _calibration(calibration)))
    out = []
    for name, fn in props:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed property, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out
