"""Kernel special functions: Bessel J, Airy Ai and log-gamma."""

from .airy import AiryPair, airy_ai, airy_ai_scaled
from .bessel import (
    BesselMethod,
    BesselResult,
    bessel_airy_phi,
    bessel_airy_zeta,
    bessel_j,
    bessel_j_airy,
    bessel_j_debye,
    bessel_j_derivative,
    bessel_j_eval,
    bessel_j_hankel,
    bessel_j_miller,
    bessel_j_pair,
    bessel_j_series,
    bessel_j_signed,
    debye_u_polynomials,
    hankel_coefficients,
)
from .gamma import ln_gamma, ln_gamma_ratio, ln_gamma_shift

__all__ = [
    "AiryPair",
    "BesselMethod",
    "BesselResult",
    "airy_ai",
    "airy_ai_scaled",
    "bessel_airy_phi",
    "bessel_airy_zeta",
    "bessel_j",
    "bessel_j_airy",
    "bessel_j_debye",
    "bessel_j_derivative",
    "bessel_j_eval",
    "bessel_j_hankel",
    "bessel_j_miller",
    "bessel_j_pair",
    "bessel_j_series",
    "bessel_j_signed",
    "debye_u_polynomials",
    "hankel_coefficients",
    "ln_gamma",
    "ln_gamma_ratio",
    "ln_gamma_shift",
]
