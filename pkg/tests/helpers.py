"""Oracle error measures shared by the test modules."""

import math

import mpmath as mp

from orthoasym.oracle import jacobi_envelope, laguerre_envelope, to_mp, xp_jacobi, xp_laguerre

DIGITS = 50


def lag_err(report, n, alpha, z):
    """|value - oracle| relative to the local envelope."""
    with mp.workdps(DIGITS):
        ref = xp_laguerre(n, alpha, z, DIGITS)
        return float(abs(to_mp(report) - ref) / laguerre_envelope(n, alpha, z, DIGITS))


def lag_rel(report, n, alpha, z):
    with mp.workdps(DIGITS):
        ref = xp_laguerre(n, alpha, z, DIGITS)
        return float(abs(to_mp(report) - ref) / abs(ref))


def jac_err(report, n, alpha, beta, theta):
    with mp.workdps(DIGITS):
        ref = xp_jacobi(n, alpha, beta, mp.cos(theta), DIGITS)
        return float(abs(to_mp(report) - ref) / jacobi_envelope(n, alpha, beta, theta, DIGITS))


def jac_err_x(report, n, alpha, beta, x):
    return jac_err(report, n, alpha, beta, math.acos(x))


def kappa_l(n, alpha):
    return n + 0.5 * (alpha + 1.0)


def kappa_j(n, alpha, beta):
    return n + 0.5 * (alpha + beta + 1.0)
