"""Exception types."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class TurningPointError(DomainError):
    """A non-uniform expansion was asked to work too close to its turning point."""


class CalibrationError(RuntimeError):
    """Exponent calibration failed or a required table is missing."""


class AccuracyWarning(UserWarning):
    """A method could not confirm its accuracy target."""
