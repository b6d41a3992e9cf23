import math
import random

import mpmath as mp
import pytest

from orthoasym.config import EvalPolicy
from orthoasym.errors import CalibrationError, DomainError
from orthoasym.laguerre import (
    laguerre_airy_eval,
    laguerre_airy_zeta,
    laguerre_bessel_simple_eval,
    laguerre_bessel_uniform_b1,
    laguerre_bessel_uniform_eval,
    laguerre_bessel_uniform_zeta,
    laguerre_eval,
    laguerre_large_alpha_b,
    laguerre_large_alpha_eval,
    laguerre_method,
    laguerre_recurrence,
    laguerre_recurrence_scaled,
    large_alpha_frame,
    large_alpha_turning_points,
    w_relation_residual,
)
from orthoasym.oracle import calibrate_exponent, convergence_order_estimate, degree_for, xp_laguerre
from orthoasym.report import scaled_ratio

from helpers import kappa_l, lag_err, lag_rel

# values frozen from a 40-digit mpmath evaluation of the closed forms
AIRY_ZETA_HALF = -0.35782852501543113
UNIFORM_ZETA_HALF = 0.41306210961638331
UNIFORM_ZETA_LIMIT = 0.61685027506808491  # (pi/4)^2
X1_HALF, X2_HALF = 0.066987298107780677, 0.93301270189221932

KAPPAS = [250, 500, 1000, 2000]


def _near(z):
    # the error oscillates with the polynomial; a single point can sit on a
    # node of the error curve, so orders are fitted to a 3-point maximum
    return (z, z * 1.002, z * 1.004)


# ---------------------------------------------------------------- recurrence


def test_recurrence_small_degrees():
    assert laguerre_recurrence(0, 0.5, 1.2) == 1.0
    assert laguerre_recurrence(1, 0.5, 1.2) == pytest.approx(0.3, abs=1e-15)
    assert laguerre_recurrence(2, 0.0, 1.0) == pytest.approx(-0.5, abs=1e-15)


def test_recurrence_overflow_reported():
    with pytest.raises(OverflowError):
        laguerre_recurrence(5000, 0.0, 3000.0)
    r = laguerre_recurrence_scaled(5000, 0.0, 3000.0)
    assert math.isfinite(r.log_abs) and r.log_abs > 709


def test_recurrence_domain():
    with pytest.raises(DomainError):
        laguerre_recurrence(-1, 0.0, 1.0)


def test_recurrence_matches_oracle_small_n():
    r = laguerre_recurrence_scaled(20, 1 / 3, 7.5)
    assert lag_rel(r, 20, 1 / 3, 7.5) <= 1e-13


# ---------------------------------------------------------------- Airy-type


def test_airy_zeta_values():
    assert laguerre_airy_zeta(1.0).zeta == 0.0
    assert laguerre_airy_zeta(0.5).zeta == pytest.approx(AIRY_ZETA_HALF, rel=1e-14)
    z = [laguerre_airy_zeta(x).zeta for x in (0.6, 0.9, 1.5)]
    assert z[0] < z[1] < 0.0 < z[2]


def test_airy_zeta_monotone_dense():
    xs = [0.05 + 0.001 * k for k in range(2000)]
    zs = [laguerre_airy_zeta(x).zeta for x in xs]
    assert all(b > a for a, b in zip(zs, zs[1:]))


def test_airy_zeta_domain():
    with pytest.raises(DomainError):
        laguerre_airy_zeta(0.0)


def test_airy_accuracy_half():
    n, a = 1000, 0.0
    z = 0.5 * 4 * kappa_l(n, a)
    assert lag_rel(laguerre_airy_eval(n, a, z), n, a, z) <= 1e-10


def test_airy_turning_point():
    n, a = 1000, 1 / 3
    z = 4 * kappa_l(n, a)
    r = laguerre_airy_eval(n, a, z)
    assert math.isfinite(r.mantissa)
    assert lag_err(r, n, a, z) <= 1e-9


def test_airy_branch_continuity():
    n, a = 1000, 1 / 3
    nu = 4 * kappa_l(n, a)
    z_lo, z_hi = nu * (1 - 1e-8), nu * (1 + 1e-8)
    lo = laguerre_airy_eval(n, a, z_lo)
    hi = laguerre_airy_eval(n, a, z_hi)
    # L itself moves by ~4e-5 over this step; the two branches must agree
    # once that true change is divided out
    with mp.workdps(40):
        true_ratio = xp_laguerre(n, a, z_lo) / xp_laguerre(n, a, z_hi)
        assert abs(scaled_ratio(lo, hi) / true_ratio - 1) <= 1e-8


def test_airy_validity_flags():
    n = 1000
    assert not laguerre_airy_eval(n, 0.0, 0.2 * 4 * kappa_l(n, 0.0)).valid
    assert not laguerre_airy_eval(n, 6.0, 0.8 * 4 * kappa_l(n, 6.0)).valid


# ---------------------------------------------------------------- simple Bessel


def test_simple_bessel_accuracy():
    r = laguerre_bessel_simple_eval(500, 1 / 3, 0.01)
    assert lag_rel(r, 500, 1 / 3, 0.01) <= 1e-11


def test_simple_bessel_leading_term():
    # with a_0 = 1 only, value / (prefactor J_alpha(2 sqrt(n x))) -> 1 as x -> 0
    from orthoasym.specfun import bessel_j

    n, a = 200, 0.5
    for x in (1e-4, 1e-6):
        r = laguerre_bessel_simple_eval(n, a, x, kmax=0)
        lead = (x / n) ** (-a / 2) * math.exp(x / 2) * bessel_j(a, 2 * math.sqrt(n * x))
        assert abs(r.value / lead - 1) <= 50 * x


def test_simple_bessel_kmax_improves():
    n, a, x = 100, 0.0, 0.05
    errs = [lag_rel(laguerre_bessel_simple_eval(n, a, x, kmax=k), n, a, x) for k in (1, 2, 3)]
    assert errs[2] < errs[0]


def test_simple_bessel_kmax_domain():
    with pytest.raises(DomainError):
        laguerre_bessel_simple_eval(100, 0.0, 0.05, kmax=7)


# ---------------------------------------------------------------- uniform Bessel


def test_uniform_zeta_values():
    assert laguerre_bessel_uniform_zeta(0.0).zeta == 0.0
    assert laguerre_bessel_uniform_zeta(0.5).zeta == pytest.approx(UNIFORM_ZETA_HALF, rel=1e-14)
    assert laguerre_bessel_uniform_zeta(1 - 1e-14).zeta == pytest.approx(UNIFORM_ZETA_LIMIT, rel=1e-6)
    with pytest.raises(DomainError):
        laguerre_bessel_uniform_zeta(1.0)


def test_uniform_zeta_monotone_dense():
    zs = [laguerre_bessel_uniform_zeta(0.0005 * k).zeta for k in range(1, 1999)]
    assert all(b > a for a, b in zip(zs, zs[1:]))


def test_uniform_b1_small_x():
    # against the explicit xi-form in 40 digits, and its x -> 0 limit
    a = 1 / 3

    def explicit(x):
        with mp.workdps(40):
            x = mp.mpf(x)
            xi = mp.sqrt(x / (1 - x))
            b = (mp.sqrt(x * (1 - x)) + mp.asin(mp.sqrt(x))) / 2
            x2 = xi * xi
            return (5 * x2**2 * b + 6 * x2 * b + 3 * xi + 12 * mp.mpf(a) ** 2 * (b - xi) - 3 * b) / (48 * xi)

    for x in (1e-3, 1e-4):
        assert laguerre_bessel_uniform_b1(x, a) == pytest.approx(float(explicit(x)), rel=1e-9)
    with mp.workdps(40):
        limit = float(explicit(mp.mpf("1e-30")) / mp.mpf("1e-30"))
    assert limit == pytest.approx((1 - a * a) / 6, rel=1e-12)
    assert math.isfinite(laguerre_bessel_uniform_b1(1e-12, a))


def test_uniform_accuracy():
    n, a = 1000, 1 / 3
    z = 0.3 * 4 * kappa_l(n, a)
    assert lag_err(laguerre_bessel_uniform_eval(n, a, z), n, a, z) <= 1e-8


def test_uniform_airy_overlap_point():
    n, a = 1000, 1 / 3
    z = 0.7 * 4 * kappa_l(n, a)
    u, v = laguerre_bessel_uniform_eval(n, a, z), laguerre_airy_eval(n, a, z)
    assert u.valid and v.valid
    assert abs(scaled_ratio(u, v) - 1) <= 1e-7


# ---------------------------------------------------------------- large alpha


def test_turning_points_half():
    x1, x2 = large_alpha_turning_points(0.5)
    assert x1 == pytest.approx(X1_HALF, rel=1e-14)
    assert x2 == pytest.approx(X2_HALF, rel=1e-14)


def test_large_alpha_b_at_x1():
    tau = 0.5
    x1, _ = large_alpha_turning_points(tau)
    b, w, r = laguerre_large_alpha_b(x1, tau)
    assert w == 0.0 and r == 0.0
    assert b == pytest.approx(tau / 2, rel=1e-15)


@pytest.mark.parametrize("tau", [0.05, 0.226, 0.5, 0.85])
def test_large_alpha_b_residual(tau):
    x1, x2 = large_alpha_turning_points(tau)
    for frac in (0.1, 0.37, 0.5, 0.81):
        x = x1 + frac * (x2 - x1)
        b, w, _ = laguerre_large_alpha_b(x, tau)
        assert abs(w_relation_residual(x, tau, w)) <= 1e-14
        assert b >= tau / 2


def test_large_alpha_b_domain():
    x1, x2 = large_alpha_turning_points(0.3)
    with pytest.raises(DomainError):
        laguerre_large_alpha_b(x2 * 1.01, 0.3)


@pytest.mark.parametrize("n,alpha", [(340, 198.5), (340, 20.6), (1000, 57.0)])
def test_bessel_argument_equals_order_at_x1(n, alpha):
    k = kappa_l(n, alpha)
    x1, _ = large_alpha_turning_points(alpha / (2 * k))
    fr = large_alpha_frame(n, alpha, x1)
    assert abs(4 * k * fr.b - alpha) <= 1e-12 * alpha


def test_derivative_argument_choice():
    # 4 kappa b keeps the nominal order; 4 kappa x falls well short of it
    tau = 0.226
    x1, x2 = large_alpha_turning_points(tau)
    x = x1 + 0.3 * (x2 - x1)

    def err(kappa, arg):
        n, a, k = degree_for(kappa, tau)
        return max(
            lag_err(laguerre_large_alpha_eval(n, a, z, derivative_arg=arg), n, a, z)
            for z in _near(4 * k * x)
        )

    good = convergence_order_estimate(lambda k: err(k, "b"), KAPPAS)
    bad = convergence_order_estimate(lambda k: err(k, "x"), KAPPAS)
    assert good.slope <= -1.7
    assert bad.slope > -1.7
    assert min(bad.errors) > 100 * max(good.errors)


def test_large_alpha_validity_window():
    n, a = 340, 198.5
    k = kappa_l(n, a)
    x1, x2 = large_alpha_turning_points(a / (2 * k))
    assert laguerre_large_alpha_eval(n, a, 4 * k * 0.5 * (x1 + x2)).valid
    assert not laguerre_large_alpha_eval(n, a, 4 * k * 0.97 * x2).valid


def test_large_alpha_table_mismatch():
    table = calibrate_exponent(0.5, x_grid=None, kappa1=60, kappa2=120, digits=30, check=False)
    with pytest.raises(CalibrationError):
        laguerre_large_alpha_eval(340, 198.5, 200.0, exponent=table)


def test_large_alpha_calibrated_matches_closed_form():
    tau = 0.226
    table = calibrate_exponent(tau, check=False)
    n, a, k = degree_for(1000, tau)
    x1, x2 = large_alpha_turning_points(tau)
    for frac in (0.1, 0.3, 0.45):
        z = 4 * k * (x1 + frac * (x2 - x1))
        with_table = laguerre_large_alpha_eval(n, a, z, exponent=table)
        closed = laguerre_large_alpha_eval(n, a, z)
        assert abs(scaled_ratio(with_table, closed) - 1) <= 5e-3
        assert lag_err(closed, n, a, z) <= 1e-7


# ---------------------------------------------------------------- dispatcher


def test_dispatch_small_degree_is_recurrence():
    r = laguerre_eval(10, 0.5, 3.0)
    assert r.method == "recurrence"
    assert r.value == laguerre_recurrence(10, 0.5, 3.0)


def test_dispatch_huge_degree_uniform():
    n, a = 10**6, 1 / 3
    r = laguerre_eval(n, a, 0.5 * 4 * kappa_l(n, a))
    assert r.method == "bessel-uniform"
    # the oracle is run at n = 10^4 with the same method; the error falls like n^-2
    m = 10**4
    z = 0.5 * 4 * kappa_l(m, a)
    e = lag_err(laguerre_method("bessel-uniform", m, a, z), m, a, z)
    assert e <= 1e-8
    assert e * (m / n) ** 2 <= 1e-8


def test_dispatch_forced_method_and_unknown():
    r = laguerre_eval(1000, 0.0, 3000.0, EvalPolicy(method="airy"))
    assert r.method == "airy"
    with pytest.raises(DomainError):
        laguerre_eval(1000, 0.0, 3000.0, EvalPolicy(method="elementary"))


def test_dispatch_domain():
    with pytest.raises(DomainError):
        laguerre_eval(100, -1.5, 1.0)
    with pytest.raises(DomainError):
        laguerre_eval(100, 0.0, -1.0)


def test_dispatch_accuracy_random():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(100, 3000)
        a = rng.uniform(-0.9, 5)
        z = 4 * kappa_l(n, a) * rng.uniform(0.001, 1.4)
        r = laguerre_eval(n, a, z)
        assert lag_err(r, n, a, z) <= 1e-9, (n, a, z, r.method)


def test_valid_methods_agree():
    # any two valid methods at the same point
    rng = random.Random(4)
    worst = 0.0
    for _ in range(30):
        n = rng.choice([1000, 4000])
        a = rng.choice([0.0, 1 / 3, 2.0])
        z = 4 * kappa_l(n, a) * rng.uniform(0.36, 0.85)
        reps = [laguerre_method(m, n, a, z) for m in ("airy", "bessel-uniform")]
        if all(r.valid for r in reps):
            worst = max(worst, abs(scaled_ratio(reps[0], reps[1]) - 1))
    assert worst <= 1e-7


# ---------------------------------------------------------------- invariants


def _recurrence_residual(method, n, a, z):
    lm, l0, lp = (laguerre_method(method, k, a, z) for k in (n - 1, n, n + 1))
    # scale everything by l0 so values far outside double range are fine
    t = [(n + 1) * scaled_ratio(lp, l0), (2 * n + a + 1 - z), (n + a) * scaled_ratio(lm, l0)]
    return abs(t[0] - t[1] + t[2]) / max(abs(v) for v in t)


@pytest.mark.parametrize(
    "method,n,alpha,lo,hi",
    [
        ("airy", 1000, 1 / 3, 0.5, 1.4),
        ("bessel-uniform", 100_000, 0.5, 0.05, 0.8),
        ("bessel-simple", 500, 1 / 3, 1e-5, 0.05),
        ("large-alpha", 20_000, 9000.0, None, None),
    ],
)
def test_recurrence_consistency(method, n, alpha, lo, hi):
    rng = random.Random(9)
    k = kappa_l(n, alpha)
    if lo is None:
        x1, x2 = large_alpha_turning_points(alpha / (2 * k))
        lo, hi = x1 * 1.001, x1 + 0.5 * (x2 - x1)
    scale = 1.0 if method == "bessel-simple" else 4 * k
    for _ in range(10):
        z = scale * rng.uniform(lo, hi)
        assert _recurrence_residual(method, n, alpha, z) <= 1e-9


def _order(method, alpha, s, kmax=None):
    def err(kappa):
        n = int(round(kappa - 0.5 * (alpha + 1)))
        worst = 0.0
        for ds in (0.0, 0.003, 0.006):
            z = 4 * kappa_l(n, alpha) * (s + ds)
            worst = max(worst, lag_err(laguerre_method(method, n, alpha, z), n, alpha, z))
        return worst

    return convergence_order_estimate(err, KAPPAS, 1e-15)


def test_order_uniform_bessel():
    assert _order("bessel-uniform", 1 / 3, 0.3).slope <= -1.7


def test_order_airy():
    est = _order("airy", 3.0, 1.0)
    assert est.floored or est.slope <= -3.7


def test_order_large_alpha():
    tau = 0.226
    x1, x2 = large_alpha_turning_points(tau)
    x = x1 + 0.3 * (x2 - x1)

    def err(kappa):
        n, a, k = degree_for(kappa, tau)
        return max(lag_err(laguerre_large_alpha_eval(n, a, z), n, a, z) for z in _near(4 * k * x))

    assert convergence_order_estimate(err, KAPPAS).slope <= -1.7


@pytest.mark.parametrize("kmax", [1, 2])
def test_order_simple_bessel(kmax):
    # fixed Bessel argument 2 sqrt(n x) = 3, i.e. fixed n x in the window
    a = 1 / 3

    def err(kappa):
        n = int(round(kappa - 0.5 * (a + 1)))
        x = 9.0 / (4 * n)
        return lag_err(laguerre_bessel_simple_eval(n, a, x, kmax), n, a, x)

    assert convergence_order_estimate(err, KAPPAS, 1e-15).slope <= -(kmax + 0.7)


def test_sign_changes_inside_window():
    rng = random.Random(5)
    for _ in range(6):
        n = rng.randint(100, 200)
        a = rng.uniform(20, 150)
        k = kappa_l(n, a)
        x1, x2 = large_alpha_turning_points(a / (2 * k))
        lo, hi = 4 * k * x1, 4 * k * x2
        grid = [4 * k * 1.2 * j / 2000 for j in range(1, 2001)]
        cell = grid[1] - grid[0]
        signs = [laguerre_eval(n, a, z).sign for z in grid]
        for j in range(1, len(grid)):
            if signs[j] != signs[j - 1]:
                assert lo - cell <= grid[j] <= hi + cell
