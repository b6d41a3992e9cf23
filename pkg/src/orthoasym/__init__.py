"""Large-degree Laguerre and Jacobi polynomials from uniform asymptotic
expansions, with an extended-precision oracle to check them against.

    >>> from orthoasym import laguerre_eval, jacobi_eval
    >>> laguerre_eval(1000, 0.0, 2000.0).method
    'airy'
    >>> jacobi_eval(500, 1 / 3, 0.25, theta=1.0).method
    'elementary'
"""

from .config import DEFAULT_POLICY, EvalPolicy, JacobiConfig, LaguerreConfig
from .errors import AccuracyWarning, CalibrationError, DomainError
from .jacobi import JACOBI_METHODS, jacobi_eval, jacobi_method, jacobi_zero_bounds, make_query
from .laguerre import LAGUERRE_METHODS, laguerre_eval, laguerre_method
from .report import EvalReport

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "CalibrationError",
    "DEFAULT_POLICY",
    "DomainError",
    "EvalPolicy",
    "EvalReport",
    "JACOBI_METHODS",
    "JacobiConfig",
    "LAGUERRE_METHODS",
    "LaguerreConfig",
    "jacobi_eval",
    "jacobi_method",
    "jacobi_zero_bounds",
    "laguerre_eval",
    "laguerre_method",
    "make_query",
]
