"""Numerical recovery of the exponent E(x, tau) of the large-alpha Laguerre
expansion.

At two degrees with the same tau the oracle value is divided by the expansion
without its exponential factor; E = -ln(ratio) / kappa must then agree
between the two kappa levels.  The mean is stored on 33 Chebyshev nodes of
[x1, (1 - delta) x2] and interpolated piecewise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import mpmath as mp
import numpy as np

from ..errors import CalibrationError
from ..laguerre.large_alpha import laguerre_large_alpha_eval, large_alpha_exponent, large_alpha_turning_points
from .xp import laguerre_frequency, to_mp, xp_laguerre

N_NODES = 33
MAX_DISCREPANCY = 1e-6
# points per local interpolant
_LOCAL = 8


class _Zero:
    """Exponent table that switches the exponential factor off."""

    def __init__(self, tau: float):
        self.tau = tau

    def __call__(self, x: float) -> float:
        return 0.0


@dataclass(frozen=True)
class CalibrationTable:
    tau: float
    delta: float
    kappa1: float
    kappa2: float
    nodes: tuple[tuple[float, float], ...]
    max_discrepancy: float

    def __call__(self, x: float) -> float:
        xs = np.array([p[0] for p in self.nodes])
        es = np.array([p[1] for p in self.nodes])
        if not xs[0] - 1e-12 <= x <= xs[-1] + 1e-12:
            raise CalibrationError(f"x={x!r} outside the calibrated range [{xs[0]:.6g}, {xs[-1]:.6g}]")
        k = int(np.searchsorted(xs, x))
        lo = min(max(k - _LOCAL // 2, 0), len(xs) - _LOCAL)
        sx, se = xs[lo : lo + _LOCAL], es[lo : lo + _LOCAL]
        # Lagrange form through the local nodes
        acc = 0.0
        for i in range(_LOCAL):
            w = 1.0
            for j in range(_LOCAL):
                if j != i:
                    w *= (x - sx[j]) / (sx[i] - sx[j])
            acc += w * se[i]
        return float(acc)

    def to_json(self) -> str:
        doc = {
            "tau": self.tau,
            "delta": self.delta,
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "nodes": [{"x": x, "E": e} for x, e in self.nodes],
            "max_discrepancy": self.max_discrepancy,
        }
        return json.dumps(doc, indent=1)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")


def table_from_json(text: str) -> CalibrationTable:
    try:
        doc = json.loads(text)
        nodes = tuple((float(p["x"]), float(p["E"])) for p in doc["nodes"])
        table = CalibrationTable(
            float(doc["tau"]), float(doc["delta"]), float(doc["kappa1"]), float(doc["kappa2"]), nodes,
            float(doc["max_discrepancy"]),
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise CalibrationError(f"malformed calibration table: {exc}") from exc
    xs = [p[0] for p in nodes]
    if len(nodes) < _LOCAL or any(b <= a for a, b in zip(xs, xs[1:])):
        raise CalibrationError("calibration nodes must be increasing and at least 8")
    if not all(math.isfinite(v) for p in nodes for v in p):
        raise CalibrationError("calibration table holds non-finite values")
    return table


def load_calibration(path: str | Path) -> CalibrationTable:
    return table_from_json(Path(path).read_text(encoding="utf-8"))


def calibration_grid(tau: float, delta: float = 0.05, count: int = N_NODES) -> list[float]:
    """Chebyshev (extrema) nodes on [x1, (1 - delta) x2], endpoints included."""
    x1, x2 = large_alpha_turning_points(tau)
    lo, hi = x1, (1.0 - delta) * x2
    return [lo + 0.5 * (hi - lo) * (1.0 - math.cos(math.pi * k / (count - 1))) for k in range(count)]


def degree_for(kappa: float, tau: float) -> tuple[int, float, float]:
    """(n, alpha, kappa) near ``kappa`` with alpha / (2 kappa) = tau exactly."""
    n = max(1, round(kappa * (1.0 - tau) - 0.5))
    k = (n + 0.5) / (1.0 - tau)
    return n, 2.0 * k * tau, k


def _exponent_at(n: int, alpha: float, kappa: float, tau: float, x: float, digits: int) -> float:
    # ratio oracle / expansion-without-exponential, averaged over a small
    # neighbourhood so that a node near a zero cannot spoil it; the local
    # slope of E is removed with the closed form first
    zero = _Zero(tau)
    z0 = 4.0 * kappa * x
    w = laguerre_frequency(n, alpha, z0)
    h = 0.25 * math.pi / w if w > 0.0 else 0.0
    e0 = large_alpha_exponent(x, tau)
    num = mp.mpf(0)
    den = mp.mpf(0)
    with mp.workdps(digits):
        for k in (-2, -1, 0, 1, 2) if h else (0,):
            z = z0 + k * h
            xx = z / (4.0 * kappa)
            if not large_alpha_turning_points(tau)[0] * (1 - 1e-12) <= xx:
                continue
            rhs = to_mp(laguerre_large_alpha_eval(n, alpha, z, delta=0.0, tau_max=1.0, exponent=zero))
            ref = xp_laguerre(n, alpha, z, digits)
            shift = mp.exp(kappa * mp.mpf(large_alpha_exponent(xx, tau) - e0))
            num += ref * rhs * shift
            den += rhs * rhs
        return float(-mp.log(num / den) / kappa)


def calibrate_exponent(
    tau: float,
    x_grid: list[float] | None = None,
    kappa1: float = 440.0,
    kappa2: float = 880.0,
    delta: float = 0.05,
    digits: int = 40,
    check: bool = True,
) -> CalibrationTable:
    """Build the exponent table for ``tau``.

    Raises :class:`CalibrationError` (with the table attached as ``.table``)
    when the two kappa levels disagree by more than 1e-6.
    """
    if kappa1 == kappa2:
        raise CalibrationError("kappa1 and kappa2 must differ")
    if not 0.0 < tau < 1.0:
        raise CalibrationError(f"tau must lie in (0, 1), got {tau!r}")
    grid = calibration_grid(tau, delta) if x_grid is None else sorted(x_grid)
    levels = [degree_for(k, tau) for k in (kappa1, kappa2)]
    nodes = []
    worst = 0.0
    for x in grid:
        e1, e2 = (_exponent_at(n, a, k, tau, x, digits) for n, a, k in levels)
        worst = max(worst, abs(e1 - e2))
        nodes.append((x, 0.5 * (e1 + e2)))
    table = CalibrationTable(tau, delta, levels[0][2], levels[1][2], tuple(nodes), worst)
    if check and worst > MAX_DISCREPANCY:
        err = CalibrationError(f"exponent differs by {worst:.3g} between kappa levels (limit {MAX_DISCREPANCY})")
        err.table = table
        raise err
    return table
