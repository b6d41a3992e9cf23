"""Extended-precision ground truth, identity tests, exponent calibration and
convergence-order fits."""

from .calibration import (
    MAX_DISCREPANCY,
    CalibrationTable,
    calibrate_exponent,
    calibration_grid,
    degree_for,
    load_calibration,
    table_from_json,
)
from .convergence import OrderEstimate, convergence_order_estimate
from .identities import (
    IdentityReport,
    default_jacobi_evaluator,
    default_laguerre_evaluator,
    identity_epsilon_laguerre,
    identity_test_jacobi,
)
from .xp import (
    default_digits,
    jacobi_envelope,
    laguerre_envelope,
    laguerre_frequency,
    rel_error,
    to_mp,
    xp_jacobi,
    xp_laguerre,
    xp_recurrence_eval,
)

__all__ = [
    "CalibrationTable",
    "IdentityReport",
    "MAX_DISCREPANCY",
    "OrderEstimate",
    "calibrate_exponent",
    "calibration_grid",
    "convergence_order_estimate",
    "default_digits",
    "default_jacobi_evaluator",
    "default_laguerre_evaluator",
    "degree_for",
    "identity_epsilon_laguerre",
    "identity_test_jacobi",
    "jacobi_envelope",
    "laguerre_envelope",
    "laguerre_frequency",
    "load_calibration",
    "rel_error",
    "table_from_json",
    "to_mp",
    "xp_jacobi",
    "xp_laguerre",
    "xp_recurrence_eval",
]
