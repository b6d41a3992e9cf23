"""Laguerre polynomials L_n^(alpha)(x) by recurrence and four expansions."""

from .airy import AiryZeta, laguerre_airy_coeffs, laguerre_airy_eval, laguerre_airy_zeta
from .bessel_simple import laguerre_bessel_simple_eval
from .bessel_uniform import (
    UniformZeta,
    laguerre_bessel_uniform_b1,
    laguerre_bessel_uniform_eval,
    laguerre_bessel_uniform_zeta,
)
from .dispatch import LAGUERRE_METHODS, laguerre_eval, laguerre_method
from .large_alpha import (
    LargeAlphaFrame,
    large_alpha_a1,
    large_alpha_exponent,
    large_alpha_frame,
    large_alpha_turning_points,
    laguerre_large_alpha_b,
    laguerre_large_alpha_eval,
    w_relation_residual,
)
from .recurrence import laguerre_recurrence, laguerre_recurrence_scaled

__all__ = [
    "AiryZeta",
    "LAGUERRE_METHODS",
    "LargeAlphaFrame",
    "UniformZeta",
    "laguerre_airy_coeffs",
    "laguerre_airy_eval",
    "laguerre_airy_zeta",
    "laguerre_bessel_simple_eval",
    "laguerre_bessel_uniform_b1",
    "laguerre_bessel_uniform_eval",
    "laguerre_bessel_uniform_zeta",
    "laguerre_eval",
    "laguerre_large_alpha_b",
    "laguerre_large_alpha_eval",
    "laguerre_method",
    "laguerre_recurrence",
    "laguerre_recurrence_scaled",
    "large_alpha_a1",
    "large_alpha_exponent",
    "large_alpha_frame",
    "large_alpha_turning_points",
    "w_relation_residual",
]
