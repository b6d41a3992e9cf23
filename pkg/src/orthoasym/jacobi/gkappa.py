"""The ratio G_kappa(alpha, beta) = Gamma(n+alpha+1) / (n! kappa^alpha)."""

from __future__ import annotations

import math

from ..errors import DomainError
from ..specfun.gamma import ln_gamma_shift

G_MODES = ("direct", "asymptotic")


def g_kappa_coeffs(rho: float) -> tuple[float, ...]:
    """C_0(rho) .. C_4(rho)."""
    return (
        1.0,
        -rho / 12.0,
        rho * (5.0 * rho + 1.0) / 1440.0,
        -rho * (4.0 + 21.0 * rho + 35.0 * rho**2) / 362880.0,
        rho * (18.0 + 101.0 * rho + 210.0 * rho**2 + 175.0 * rho**3) / 87091200.0,
    )


def _poch(a: float, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= a + j
    return out


def log_g_kappa(alpha: float, beta: float, kappa: float) -> float:
    """ln G_kappa from the gamma ratio."""
    # Gamma(bottom + alpha) / Gamma(bottom) with bottom = n + 1
    bottom = kappa - 0.5 * (alpha + beta - 1.0)
    if not (bottom > 0.0 and bottom + alpha > 0.0 and kappa > 0.0):
        raise DomainError(f"G_kappa needs positive gamma arguments, got {bottom + alpha!r}, {bottom!r}")
    return ln_gamma_shift(bottom, alpha) - alpha * math.log(kappa)


def g_kappa(alpha: float, beta: float, kappa: float, mode: str = "direct") -> float:
    """G_kappa(alpha, beta) by the gamma ratio or by its series in 1/w^2, w = kappa - beta/2."""
    if mode == "direct":
        lg = log_g_kappa(alpha, beta, kappa)
        if alpha == int(alpha) and 0 <= alpha <= 20:
            # finite product (n+1)...(n+alpha) / kappa^alpha, no rounding from logs
            bottom = kappa - 0.5 * (alpha + beta - 1.0)
            out = 1.0
            for j in range(int(alpha)):
                out *= (bottom + j) / kappa
            return out
        return math.exp(lg)
    if mode != "asymptotic":
        raise DomainError(f"unknown mode {mode!r}; choose from {G_MODES}")
    log_g_kappa(alpha, beta, kappa)  # same domain check
    w = kappa - 0.5 * beta
    rho = 0.5 * (alpha + 1.0)
    w2 = w * w
    acc = 0.0
    wp = 1.0
    for m, c in enumerate(g_kappa_coeffs(rho)):
        acc += c * _poch(-alpha, 2 * m) / wp
        wp *= w2
    return (w / kappa) ** alpha * acc
