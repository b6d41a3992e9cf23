"""Evaluation outcome shared by every polynomial evaluator."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class EvalReport:
    """Value of one polynomial evaluation plus how it was obtained.

    Polynomial values of large degree easily leave the double range (the
    Laguerre polynomials grow like ``exp(x/2)``), so the value is carried as
    ``mantissa * exp(log_scale)``.  For ordinary magnitudes ``log_scale`` is 0.
    """

    mantissa: float
    log_scale: float = 0.0
    method: str = "recurrence"
    error_estimate: float = 0.0
    valid: bool = True
    region: str = ""

    @property
    def value(self) -> float:
        if self.log_scale == 0.0:
            return self.mantissa
        if self.mantissa == 0.0:
            return 0.0
        try:
            return self.mantissa * math.exp(self.log_scale)
        except OverflowError:
            return math.copysign(math.inf, self.mantissa)

    @property
    def log_abs(self) -> float:
        if self.mantissa == 0.0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def normalized(self) -> EvalReport:
        """Fold as much of ``log_scale`` into the mantissa as is safe."""
        if self.log_scale == 0.0 or self.mantissa == 0.0:
            return self
        la = self.log_abs
        if abs(la) < 600.0:
            return replace(self, mantissa=self.sign * math.exp(la), log_scale=0.0)
        return replace(self, mantissa=float(self.sign), log_scale=la)

    def with_status(self, **changes) -> EvalReport:
        return replace(self, **changes)


def from_log(sign: float, log_abs: float, **fields) -> EvalReport:
    """Build a report from a sign and ``ln|value|``."""
    if sign == 0 or log_abs == -math.inf:
        return EvalReport(0.0, 0.0, **fields)
    s = 1.0 if sign > 0 else -1.0
    if abs(log_abs) < 600.0:
        return EvalReport(s * math.exp(log_abs), 0.0, **fields)
    return EvalReport(s, log_abs, **fields)


def scaled_ratio(num: EvalReport, den: EvalReport) -> float:
    """``num / den`` computed without forming either value."""
    if den.mantissa == 0.0:
        return math.copysign(math.inf, num.mantissa) if num.mantissa else math.nan
    return (num.mantissa / den.mantissa) * math.exp(num.log_scale - den.log_scale)
