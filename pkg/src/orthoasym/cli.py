"""Command line: eval, errormap, bench, selftest, calibrate.

Exit codes: 0 success, 1 domain error or bad flags, 2 accuracy or validity
failure, 3 selftest failure.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import statistics
import sys
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import click

from .config import DEFAULT_POLICY, EvalPolicy
from .errors import CalibrationError, DomainError
from .jacobi import JACOBI_METHODS, jacobi_eval, make_query
from .laguerre import LAGUERRE_METHODS, laguerre_eval, large_alpha_turning_points
from .oracle import (
    MAX_DISCREPANCY,
    calibrate_exponent,
    identity_epsilon_laguerre,
    identity_test_jacobi,
    load_calibration,
)

EXIT_OK, EXIT_DOMAIN, EXIT_ACCURACY, EXIT_SELFTEST = 0, 1, 2, 3
ALL_METHODS = ("auto",) + LAGUERRE_METHODS + tuple(m for m in JACOBI_METHODS if m not in LAGUERRE_METHODS)


class ExitCode(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


@dataclass
class ErrorMapRow:
    family: str
    n: int
    alpha: float
    beta: float
    x: float
    theta: float
    method: str
    value: float
    eps: float
    status: str  # ok, above-threshold, invalid-region


ROW_FIELDS = [f.name for f in fields(ErrorMapRow)]


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _parse_range(text: str, cast=float) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise ExitCode(EXIT_DOMAIN, f"range must look like lo:hi, got {text!r}")
    try:
        lo, hi = cast(parts[0]), cast(parts[1])
    except ValueError as exc:
        raise ExitCode(EXIT_DOMAIN, f"bad range {text!r}: {exc}") from exc
    if not lo <= hi:
        raise ExitCode(EXIT_DOMAIN, f"empty range {text!r}")
    return lo, hi


def _policy(method: str) -> EvalPolicy:
    return DEFAULT_POLICY if method == "auto" else EvalPolicy(method=method)


def _load_table(path):
    if path is None:
        return None
    try:
        return load_calibration(path)
    except (OSError, CalibrationError) as exc:
        raise ExitCode(EXIT_DOMAIN, f"cannot load calibration table: {exc}") from exc


def _laguerre_evaluator(policy: EvalPolicy, table):
    return lambda n, a, z: laguerre_eval(n, a, z, policy, table)


def _jacobi_evaluator(policy: EvalPolicy):
    return lambda n, a, b, x: jacobi_eval(n, a, b, x=x, policy=policy, param_min=-2.0)


@click.group()
def cli():
    """Large-degree Laguerre and Jacobi polynomials by uniform asymptotic expansions."""


# ---------------------------------------------------------------- eval


@cli.command("eval")
@click.option("--family", type=click.Choice(["laguerre", "jacobi"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--alpha", type=float, required=True)
@click.option("--beta", type=float, default=None)
@click.option("--x", "x", type=float, default=None)
@click.option("--theta", type=float, default=None)
@click.option("--method", type=click.Choice(ALL_METHODS), default="auto")
@click.option("--calibration", type=click.Path(), default=None, help="exponent table for large-alpha")
@click.option("--json", "as_json", is_flag=True)
def cmd_eval(family, n, alpha, beta, x, theta, method, calibration, as_json):
    """Evaluate one polynomial value."""
    policy = _policy(method)
    if family == "laguerre":
        if theta is not None or x is None:
            raise ExitCode(EXIT_DOMAIN, "Laguerre needs --x (and no --theta)")
        r = laguerre_eval(n, alpha, x, policy, _load_table(calibration))
    else:
        if beta is None:
            raise ExitCode(EXIT_DOMAIN, "Jacobi needs --beta")
        if (x is None) == (theta is None):
            raise ExitCode(EXIT_DOMAIN, "give exactly one of --x, --theta")
        r = jacobi_eval(n, alpha, beta, x=x, theta=theta, policy=policy)
        q = make_query(n, alpha, beta, x, theta)
        x, theta = q.x, q.theta
    out = {
        "family": family, "n": n, "alpha": alpha, "beta": beta, "x": x, "theta": theta,
        "method": r.method, "value": r.value, "mantissa": r.mantissa, "log_scale": r.log_scale,
        "error_estimate": r.error_estimate, "valid": r.valid, "region": r.region,
    }
    if as_json:
        click.echo(json.dumps(out))
    else:
        click.echo(f"value {_fmt(r.value)}")
        if r.log_scale:
            click.echo(f"  = {_fmt(r.mantissa)} * exp({_fmt(r.log_scale)})")
        click.echo(f"method {r.method}")
        click.echo(f"error_estimate {r.error_estimate:.3g}")
    if method != "auto" and not r.valid:
        raise ExitCode(EXIT_ACCURACY, f"method {method} is outside its validity region here")


# ---------------------------------------------------------------- errormap


def _laguerre_window(method: str, n: int, alpha: float, x_range, delta: float):
    """Sampling window in the scaled variable x / (4 kappa)."""
    if x_range is not None:
        return x_range
    kappa = n + 0.5 * (alpha + 1.0)
    tau = alpha / (2.0 * kappa)
    if method == "large-alpha" and 0.0 < tau < 1.0:
        x1, x2 = large_alpha_turning_points(tau)
        return x1, (1.0 - delta) * x2
    return 1e-6, 1.0


def errormap_rows(
    family: str,
    method: str,
    alpha: float,
    beta_range: tuple[float, float],
    n_range: tuple[int, int],
    points: int,
    threshold: float,
    seed: int,
    x_range=None,
    theta_range=(0.0, math.pi),
    table=None,
) -> list[ErrorMapRow]:
    """Rows of the error map, reproducible from ``seed``."""
    rng = random.Random(seed)
    policy = _policy(method)
    rows = []
    for _ in range(points):
        n = rng.randint(*n_range)
        beta = rng.uniform(*beta_range) if beta_range[0] != beta_range[1] else beta_range[0]
        if family == "laguerre":
            lo, hi = _laguerre_window(method, n, alpha, x_range, policy.laguerre.large_alpha_delta)
            s = rng.uniform(lo, hi)
            z = 4.0 * (n + 0.5 * (alpha + 1.0)) * s
            r = laguerre_eval(n, alpha, z, policy, table)
            rep = identity_epsilon_laguerre(n, alpha, z, _laguerre_evaluator(policy, table))
            x, theta, beta = z, math.nan, math.nan
        else:
            theta = rng.uniform(*theta_range)
            q = make_query(n, alpha, beta, theta=theta)
            x = q.x
            r = jacobi_eval(n, alpha, beta, theta=theta, policy=policy)
            rep = identity_test_jacobi(n, alpha, beta, x, _jacobi_evaluator(policy))
        eps = rep.eps if rep.eps == rep.eps else math.inf
        if not r.valid:
            status = "invalid-region"
        elif eps > threshold:
            status = "above-threshold"
        else:
            status = "ok"
        rows.append(ErrorMapRow(family, n, alpha, beta, x, theta, r.method, r.value, eps, status))
    return rows


def rows_to_csv(rows: list[ErrorMapRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ROW_FIELDS)
    for row in rows:
        w.writerow([_fmt(getattr(row, k)) for k in ROW_FIELDS])
    return buf.getvalue()


def rows_to_json(rows: list[ErrorMapRow]) -> str:
    return json.dumps({"fields": ROW_FIELDS, "rows": [asdict(r) for r in rows]}, indent=1) + "\n"


@cli.command("errormap")
@click.option("--family", type=click.Choice(["laguerre", "jacobi"]), required=True)
@click.option("--method", type=click.Choice(ALL_METHODS), default="auto")
@click.option("--alpha", type=float, required=True)
@click.option("--beta", type=float, default=None)
@click.option("--beta-range", default=None, help="lo:hi, sampled uniformly")
@click.option("--n", "n", type=int, default=None)
@click.option("--n-range", default=None, help="lo:hi, sampled uniformly")
@click.option("--x-range", default=None, help="Laguerre window in x / (4 kappa)")
@click.option("--theta-range", default=None, help="Jacobi window in theta")
@click.option("--points", type=int, default=500)
@click.option("--threshold", type=float, default=1e-9)
@click.option("--seed", type=int, default=0)
@click.option("--calibration", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=None, help="*.json for JSON, anything else CSV; stdout if omitted")
def cmd_errormap(family, method, alpha, beta, beta_range, n, n_range, x_range, theta_range, points, threshold, seed, calibration, out):
    """Sample identity-test errors over a region and write ErrorMapRow records."""
    if (n is None) == (n_range is None):
        raise ExitCode(EXIT_DOMAIN, "give exactly one of --n, --n-range")
    nr = (n, n) if n is not None else _parse_range(n_range, int)
    if nr[0] < 1:
        raise ExitCode(EXIT_DOMAIN, "degrees must be at least 1")
    if points < 1:
        raise ExitCode(EXIT_DOMAIN, "--points must be positive")
    if family == "jacobi":
        if beta_range is not None:
            br = _parse_range(beta_range)
        elif beta is not None:
            br = (beta, beta)
        else:
            raise ExitCode(EXIT_DOMAIN, "Jacobi needs --beta or --beta-range")
    else:
        br = (0.0, 0.0)
    xr = _parse_range(x_range) if x_range else None
    tr = _parse_range(theta_range) if theta_range else (0.0, math.pi)
    if xr is not None and xr[0] <= 0.0:
        raise ExitCode(EXIT_DOMAIN, "--x-range must be positive")
    if not (0.0 <= tr[0] and tr[1] <= math.pi):
        raise ExitCode(EXIT_DOMAIN, "--theta-range must lie in [0, pi]")
    rows = errormap_rows(family, method, alpha, br, nr, points, threshold, seed, xr, tr, _load_table(calibration))
    text = rows_to_json(rows) if out and out.endswith(".json") else rows_to_csv(rows)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
    bad = sum(r.status == "above-threshold" for r in rows)
    invalid = sum(r.status == "invalid-region" for r in rows)
    click.echo(f"{len(rows)} rows, {bad} above threshold, {invalid} outside the validity region", err=True)


# ---------------------------------------------------------------- bench


def _bench_points(family: str, n: int, alpha: float, beta: float, count: int, seed: int) -> list[float]:
    rng = random.Random(seed)
    if family == "laguerre":
        nu = 4.0 * (n + 0.5 * (alpha + 1.0))
        return [nu * rng.uniform(0.1, 0.9) for _ in range(count)]
    return [rng.uniform(0.5, math.pi - 0.5) for _ in range(count)]


def _time_one(fn, repeat: int = 3) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        best = min(best, time.perf_counter_ns() - t0)
    return best


def bench_table(
    family: str, n_list, points: int, method: str = "auto", alpha: float = 1 / 3, beta: float = 0.25,
    recurrence_max: int = 100_000, seed: int = 0,
) -> list[dict]:
    """Median ns per evaluation for each n, for ``method`` and the recurrence."""
    policy = _policy(method)
    rows = []
    for n in n_list:
        pts = _bench_points(family, n, alpha, beta, points, seed)
        if family == "laguerre":
            fast = [lambda p=p: laguerre_eval(n, alpha, p, policy) for p in pts]
            slow = [lambda p=p: laguerre_eval(n, alpha, p, EvalPolicy(method="recurrence")) for p in pts]
            used = [laguerre_eval(n, alpha, p, policy).method for p in pts]
        else:
            fast = [lambda p=p: jacobi_eval(n, alpha, beta, theta=p, policy=policy) for p in pts]
            slow = [lambda p=p: jacobi_eval(n, alpha, beta, theta=p, policy=EvalPolicy(method="recurrence")) for p in pts]
            used = [jacobi_eval(n, alpha, beta, theta=p, policy=policy).method for p in pts]
        t_fast = statistics.median(_time_one(f) for f in fast)
        t_slow = statistics.median(_time_one(f, 1) for f in slow) if n <= recurrence_max else math.nan
        counts = {m: used.count(m) for m in sorted(set(used))}
        rows.append({
            "n": n, "ns_per_eval": t_fast, "recurrence_ns_per_eval": t_slow,
            "speedup": t_slow / t_fast if t_fast else math.nan, "methods": counts,
        })
    return rows


@cli.command("bench")
@click.option("--family", type=click.Choice(["laguerre", "jacobi"]), default="jacobi")
@click.option("--n-list", default="1000,100000,1000000")
@click.option("--points", type=int, default=20)
@click.option("--method", type=click.Choice(ALL_METHODS), default="auto")
@click.option("--alpha", type=float, default=1 / 3)
@click.option("--beta", type=float, default=0.25)
@click.option("--recurrence-max", type=int, default=100_000, help="skip the recurrence above this degree")
@click.option("--json", "as_json", is_flag=True)
def cmd_bench(family, n_list, points, method, alpha, beta, recurrence_max, as_json):
    """Time dispatched evaluation against the forward recurrence."""
    try:
        ns = [int(v) for v in n_list.split(",") if v.strip()]
    except ValueError as exc:
        raise ExitCode(EXIT_DOMAIN, f"bad --n-list: {exc}") from exc
    if not ns or min(ns) < 1 or points < 1:
        raise ExitCode(EXIT_DOMAIN, "need positive degrees and --points")
    rows = bench_table(family, ns, points, method, alpha, beta, recurrence_max)
    if as_json:
        click.echo(json.dumps(rows))
        return
    click.echo(f"{'n':>10} {'ns/eval':>12} {'recurrence':>14} {'speedup':>10}  methods")
    for r in rows:
        click.echo(
            f"{r['n']:>10} {r['ns_per_eval']:>12.0f} {r['recurrence_ns_per_eval']:>14.0f} "
            f"{r['speedup']:>10.1f}  {r['methods']}"
        )


# ---------------------------------------------------------------- selftest


@cli.command("selftest")
@click.option("--quick", is_flag=True, help="subset that runs in well under 30 s")
@click.option("--calibration", type=click.Path(), default=None, help="check this exponent table")
def cmd_selftest(quick, calibration):
    """Run the invariant suite and print one line per property."""
    from .selftest import run_selftest

    results = run_selftest(quick=quick, calibration=calibration)
    for name, ok, detail in results:
        click.echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    failed = sum(not ok for _, ok, _ in results)
    click.echo(f"{len(results) - failed}/{len(results)} properties pass")
    if failed:
        raise ExitCode(EXIT_SELFTEST)


# ---------------------------------------------------------------- calibrate


@cli.command("calibrate")
@click.option("--tau", type=float, required=True)
@click.option("--kappa1", type=float, default=440.0)
@click.option("--kappa2", type=float, default=880.0)
@click.option("--delta", type=float, default=0.05)
@click.option("--digits", type=int, default=40)
@click.option("--out", type=click.Path(), required=True)
def cmd_calibrate(tau, kappa1, kappa2, delta, digits, out):
    """Build the exponent table for the large-alpha Laguerre expansion."""
    try:
        table = calibrate_exponent(tau, kappa1=kappa1, kappa2=kappa2, delta=delta, digits=digits, check=False)
    except CalibrationError as exc:
        raise ExitCode(EXIT_DOMAIN, str(exc)) from exc
    table.save(out)
    click.echo(f"max discrepancy {table.max_discrepancy:.3g} over {len(table.nodes)} nodes")
    if table.max_discrepancy > MAX_DISCREPANCY:
        raise ExitCode(EXIT_ACCURACY, f"discrepancy above {MAX_DISCREPANCY:g}; table written anyway")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="orthoasym", standalone_mode=False)
    except ExitCode as exc:
        if exc.message:
            click.echo(f"error: {exc.message}", err=True)
        return exc.code
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN
    except click.exceptions.Abort:
        return EXIT_DOMAIN
    except click.ClickException as exc:
        exc.show()
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
