"""Observed order of an asymptotic approximation in its large parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import DomainError

# errors below this are treated as rounding, not truncation
FLOOR = 1e-13


@dataclass(frozen=True)
class OrderEstimate:
    slope: float
    errors: tuple[float, ...]
    kappas: tuple[float, ...]
    floored: bool  # errors at the double-precision floor; slope meaningless


def convergence_order_estimate(
    error_at: Callable[[float], float], kappas: Sequence[float], floor: float = FLOOR
) -> OrderEstimate:
    """Least-squares slope of log(error) against log(kappa).

    ``error_at(kappa)`` returns the error against the oracle (typically
    relative to the local envelope).  A negative slope -p means O(kappa^-p).
    """
    if len(kappas) < 3:
        raise DomainError("need at least three kappa values")
    errs = [float(error_at(k)) for k in kappas]
    floored = max(errs) <= floor or min(errs) <= 0.0
    if floored:
        return OrderEstimate(math.nan, tuple(errs), tuple(kappas), True)
    slope = float(np.polyfit(np.log(kappas), np.log(errs), 1)[0])
    return OrderEstimate(slope, tuple(errs), tuple(kappas), min(errs) <= floor)
