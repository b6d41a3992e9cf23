"""Tunable thresholds for the method dispatchers.

Every region boundary used by a dispatcher lives here so that tests and the
command line can move it.  The defaults keep each boundary inside the overlap
of two methods.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class BesselConfig:
    series_z_max: float = 12.0
    # the series is accepted only if its cancellation estimate is below this
    series_tol: float = 2e-14
    hankel_z_min: float = 30.0
    hankel_nu2_factor: float = 1.5
    hankel_offset: float = 10.0
    debye_nu_min: float = 25.0
    debye_gap: float = 0.2
    debye_tol: float = 1e-16
    # Airy-type is used only when Miller would need more steps than this
    miller_budget: int = 200_000
    airy_band: float = 0.2
    airy_nu_min: float = 25.0
    term_count: int = 8


@dataclass(frozen=True)
class LaguerreConfig:
    recurrence_n_max: int = 100
    large_alpha_min: float = 15.0
    large_alpha_tau_max: float = 0.9
    large_alpha_delta: float = 0.05
    simple_bessel_x_max: float = 30.0  # bound on n * x
    simple_bessel_kmax: int = 4
    uniform_x_max: float = 0.85  # in the scaled variable x / (4 kappa)
    airy_x_min: float = 0.7  # dispatcher switch to Airy-type
    airy_window_min: float = 0.35  # Airy-type validity floor
    alpha_bound: float = 5.0


@dataclass(frozen=True)
class JacobiConfig:
    recurrence_n_max: int = 70
    elementary_theta_min: float = 0.3
    bessel_theta_max: float = 2.84  # pi - 0.3
    param_bound: float = 5.0
    large_beta_min: float = 100.0
    large_beta_n_max: int = 110
    large_beta_x_min: float = 0.994
    large_ab_min: float = 10.0
    large_ab_delta: float = 0.05
    bessel_a2_correction: bool = True


@dataclass(frozen=True)
class EvalPolicy:
    """How a dispatcher chooses a method.

    ``method`` is ``"auto"`` or a method tag; ``tolerance`` is the largest
    estimated relative error an expansion may report and still be used.
    """

    method: str = "auto"
    tolerance: float = 1e-9
    bessel: BesselConfig = field(default_factory=BesselConfig)
    laguerre: LaguerreConfig = field(default_factory=LaguerreConfig)
    jacobi: JacobiConfig = field(default_factory=JacobiConfig)


DEFAULT_POLICY = EvalPolicy()
DEFAULT_BESSEL = BesselConfig()
