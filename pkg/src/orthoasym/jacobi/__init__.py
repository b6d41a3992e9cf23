"""Jacobi polynomials P_n^(alpha,beta)(x) by recurrence and four expansions."""

from .bessel import BesselFrame, bessel_frame, jacobi_bessel_a1, jacobi_bessel_eval, small_theta_constants
from .dispatch import JACOBI_METHODS, jacobi_eval, jacobi_eval_query, jacobi_method, make_query
from .elementary import ElementaryFrame, elementary_frame, jacobi_elementary_coeffs, jacobi_elementary_eval
from .gkappa import G_MODES, g_kappa, g_kappa_coeffs, log_g_kappa
from .large_ab import (
    LargeABFrame,
    jacobi_large_ab_eval,
    large_ab_chi,
    large_ab_frame,
    large_ab_psi,
    large_ab_turning_points,
)
from .large_beta import LargeBetaFrame, jacobi_large_beta_eval, large_beta_coeffs, large_beta_frame, large_beta_z
from .query import JacobiQuery, jacobi_symmetry
from .recurrence import jacobi_recurrence, jacobi_recurrence_scaled
from .zeros import ZeroBounds, jacobi_zero_bounds

__all__ = [
    "BesselFrame",
    "ElementaryFrame",
    "G_MODES",
    "JACOBI_METHODS",
    "JacobiQuery",
    "LargeABFrame",
    "LargeBetaFrame",
    "ZeroBounds",
    "bessel_frame",
    "elementary_frame",
    "g_kappa",
    "g_kappa_coeffs",
    "jacobi_bessel_a1",
    "jacobi_bessel_eval",
    "jacobi_elementary_coeffs",
    "jacobi_elementary_eval",
    "jacobi_eval",
    "jacobi_eval_query",
    "jacobi_large_ab_eval",
    "jacobi_large_beta_eval",
    "jacobi_method",
    "jacobi_recurrence",
    "jacobi_recurrence_scaled",
    "jacobi_symmetry",
    "jacobi_zero_bounds",
    "large_ab_chi",
    "large_ab_frame",
    "large_ab_psi",
    "large_ab_turning_points",
    "large_beta_coeffs",
    "large_beta_frame",
    "large_beta_z",
    "log_g_kappa",
    "make_query",
    "small_theta_constants",
]
