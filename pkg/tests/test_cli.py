import csv
import io
import json
import math

import pytest

from orthoasym.cli import (
    EXIT_ACCURACY,
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_SELFTEST,
    ErrorMapRow,
    bench_table,
    errormap_rows,
    main,
)
from orthoasym.laguerre import large_alpha_exponent
from orthoasym.oracle import load_calibration


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------- eval


def test_eval_degree_zero(capsys):
    code, out, _ = run(capsys, "eval", "--family", "laguerre", "--n", "0", "--alpha", "0.5", "--x", "1.2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "value 1"
    assert "method recurrence" in out


def test_eval_jacobi_degree_one(capsys):
    code, out, _ = run(capsys, "eval", "--family", "jacobi", "--n", "1", "--alpha", "0.3333333333", "--beta", "0.25", "--x", "0")
    assert code == EXIT_OK
    value = float(out.split()[1])
    assert value == pytest.approx((0.3333333333 - 0.25) / 2, abs=1e-16)


def test_eval_json_elementary(capsys):
    code, out, _ = run(capsys, "eval", "--family", "jacobi", "--n", "500", "--alpha", "0.3333", "--beta", "0.25",
                       "--theta", "1.0", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["method"] == "elementary" and doc["valid"]
    assert doc["x"] == pytest.approx(math.cos(1.0))
    assert math.isfinite(doc["value"])


def test_eval_huge_value_scaled(capsys):
    code, out, _ = run(capsys, "eval", "--family", "laguerre", "--n", "5000", "--alpha", "0", "--x", "30000", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["log_scale"] > 709


@pytest.mark.parametrize("argv", [
    ("eval", "--family", "laguerre", "--n", "10", "--alpha", "-2", "--x", "1"),
    ("eval", "--family", "laguerre", "--n", "10", "--alpha", "0", "--x", "-1"),
    ("eval", "--family", "jacobi", "--n", "10", "--alpha", "0", "--x", "0.5"),
    ("eval", "--family", "jacobi", "--n", "10", "--alpha", "0", "--beta", "0", "--x", "2"),
    ("eval", "--family", "jacobi", "--n", "10", "--alpha", "0", "--beta", "0", "--x", "0.1", "--theta", "1"),
    ("eval", "--family", "laguerre", "--n", "1000", "--alpha", "0", "--x", "10", "--method", "elementary"),
    ("eval", "--family", "laguerre", "--n", "10", "--alpha", "0", "--x", "1", "--calibration", "/nonexistent.json"),
    ("eval", "--family", "hermite", "--n", "10", "--alpha", "0", "--x", "1"),
])
def test_eval_domain_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_DOMAIN


def test_eval_forced_outside_window(capsys):
    code, out, err = run(capsys, "eval", "--family", "jacobi", "--n", "500", "--alpha", "0.3", "--beta", "0.2",
                         "--theta", "0.1", "--method", "elementary")
    assert code == EXIT_ACCURACY
    assert "validity" in err


# ---------------------------------------------------------------- errormap

EM_ARGS = ("errormap", "--family", "jacobi", "--method", "elementary", "--alpha", "0.3333", "--beta", "0.2",
           "--n-range", "10:1000", "--points", "60", "--threshold", "1e-9", "--seed", "4")


def test_errormap_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, *EM_ARGS, "--out", str(a))[0] == EXIT_OK
    assert run(capsys, *EM_ARGS, "--out", str(b))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.csv"
    run(capsys, *EM_ARGS[:-1], "5", "--out", str(c))
    assert c.read_bytes() != a.read_bytes()


def test_errormap_csv_schema(capsys):
    code, out, err = run(capsys, *EM_ARGS)
    assert code == EXIT_OK
    reader = csv.reader(io.StringIO(out))
    header = next(reader)
    assert header == list(ErrorMapRow.__dataclass_fields__)
    assert header == ["family", "n", "alpha", "beta", "x", "theta", "method", "value", "eps", "status"]
    rows = list(reader)
    assert len(rows) == 60
    for r in rows:
        assert r[9] in ("ok", "above-threshold", "invalid-region")
        assert float(r[8]) >= 0 or r[9] == "invalid-region"
        assert 10 <= int(r[1]) <= 1000
    # 17 significant digits round-trip the value exactly
    theta = rows[0][5]
    assert float(theta) == float(repr(float(theta)))
    assert "60 rows" in err


def test_errormap_json_mirrors_csv(capsys, tmp_path):
    p = tmp_path / "m.json"
    assert run(capsys, *EM_ARGS, "--out", str(p))[0] == EXIT_OK
    doc = json.loads(p.read_text())
    assert doc["fields"] == list(ErrorMapRow.__dataclass_fields__)
    assert len(doc["rows"]) == 60
    _, out, _ = run(capsys, *EM_ARGS)
    first = next(csv.DictReader(io.StringIO(out)))
    assert float(first["theta"]) == doc["rows"][0]["theta"]


def test_errormap_pattern_edges():
    # violations of the elementary expansion cluster toward theta = 0 and pi
    rows = errormap_rows("jacobi", "elementary", 0.3333, (0.2, 0.2), (10, 1000), 300, 1e-9, 1)
    valid = [r for r in rows if r.status != "invalid-region"]
    edge = [r for r in valid if min(r.theta, math.pi - r.theta) < 0.6]
    mid = [r for r in valid if min(r.theta, math.pi - r.theta) >= 0.6]
    rate = lambda rs: sum(r.status == "above-threshold" for r in rs) / len(rs)
    assert rate(edge) > rate(mid)
    assert all(r.status == "invalid-region" for r in rows if min(r.theta, math.pi - r.theta) < 0.3)


def test_errormap_large_alpha_half_interval(capsys):
    code, out, _ = run(capsys, "errormap", "--family", "laguerre", "--method", "large-alpha", "--alpha", "198.5",
                       "--n", "340", "--points", "100", "--threshold", "1e-10", "--seed", "2")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    from orthoasym.laguerre import large_alpha_turning_points

    k = 340 + 0.5 * 199.5
    x1, x2 = large_alpha_turning_points(198.5 / (2 * k))
    first_half = [r for r in rows if float(r["x"]) <= 4 * k * 0.5 * (x1 + x2)]
    assert first_half
    assert sum(r["status"] == "above-threshold" for r in first_half) == 0


@pytest.mark.parametrize("extra", [
    ("--n-range", "10:x"),
    ("--n-range", "100:10"),
    ("--n", "0"),
    ("--n", "10", "--n-range", "10:20"),
    ("--n", "10", "--theta-range", "0:4"),
    ("--n", "10", "--points", "0"),
])
def test_errormap_bad_ranges(capsys, extra):
    argv = ("errormap", "--family", "jacobi", "--alpha", "0.3", "--beta", "0.2") + extra
    assert run(capsys, *argv)[0] == EXIT_DOMAIN


def test_errormap_beta_range(capsys):
    rows = errormap_rows("jacobi", "auto", 0.3, (0.1, 2.0), (50, 60), 20, 1e-9, 3)
    assert all(0.1 <= r.beta <= 2.0 for r in rows)
    assert len({r.beta for r in rows}) > 1


# ---------------------------------------------------------------- bench


def test_bench_degree_independence():
    rows = bench_table("jacobi", [1000, 1_000_000], 20, recurrence_max=1000)
    assert rows[1]["ns_per_eval"] <= 2 * rows[0]["ns_per_eval"]
    assert math.isnan(rows[1]["recurrence_ns_per_eval"])


def test_bench_recurrence_linear():
    rows = bench_table("jacobi", [1000, 100_000], 3, method="elementary")
    assert rows[1]["recurrence_ns_per_eval"] >= 50 * rows[0]["recurrence_ns_per_eval"]


def test_bench_elementary_faster_than_bessel():
    el = bench_table("jacobi", [10_000], 20, method="elementary", recurrence_max=0)[0]
    be = bench_table("jacobi", [10_000], 20, method="bessel", recurrence_max=0)[0]
    assert el["ns_per_eval"] < be["ns_per_eval"]


def test_bench_command(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "1000,2000", "--points", "3", "--recurrence-max", "2000", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [1000, 2000]
    assert run(capsys, "bench", "--n-list", "a,b")[0] == EXIT_DOMAIN


# ---------------------------------------------------------------- selftest


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == EXIT_OK
    assert "FAIL" not in out


def test_selftest_corrupted_calibration(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"tau": 0.226, "nodes": [')
    code, out, _ = run(capsys, "selftest", "--quick", "--calibration", str(bad))
    assert code == EXIT_SELFTEST
    assert "FAIL oracle.calibration" in out


# ---------------------------------------------------------------- calibrate


@pytest.fixture(scope="module")
def calibrated(tmp_path_factory):
    d = tmp_path_factory.mktemp("cal")
    codes = [main(["calibrate", "--tau", "0.226", "--out", str(d / f"t{i}.json")]) for i in (1, 2)]
    return codes, d / "t1.json", d / "t2.json"


def test_calibrate_exit_code(calibrated):
    codes, _, _ = calibrated
    assert codes[0] == EXIT_OK


def test_calibrate_writes_table_and_is_idempotent(calibrated):
    _, a, b = calibrated
    assert a.read_bytes() == b.read_bytes()
    table = load_calibration(a)
    assert len(table.nodes) == 33 and table.tau == 0.226


def test_calibrate_small_tau(tmp_path):
    p = tmp_path / "s.json"
    main(["calibrate", "--tau", "0.03", "--out", str(p)])
    table = load_calibration(p)
    es = [e for _, e in table.nodes]
    # smooth and close to the closed form for the same tau
    assert max(abs(e - large_alpha_exponent(x, 0.03)) for x, e in table.nodes) <= 1e-5
    d2 = [es[i - 1] - 2 * es[i] + es[i + 1] for i in range(1, len(es) - 1)]
    assert max(abs(v) for v in d2) <= 0.1 * (max(es) - min(es))


def test_calibrate_bad_arguments(capsys, tmp_path):
    assert run(capsys, "calibrate", "--tau", "1.5", "--out", str(tmp_path / "x.json"))[0] == EXIT_DOMAIN
    assert run(capsys, "calibrate", "--tau", "0.2", "--kappa1", "100", "--kappa2", "100",
               "--out", str(tmp_path / "y.json"))[0] == EXIT_DOMAIN
