"""End-to-end checks of the realop command-line tool."""

import json
import math
import os
import subprocess
import xml.etree.ElementTree as ET

import pytest

CLI = os.environ.get("REALOP_CLI", "realop")


def run(*args, env=None, check=None):
    full_env = dict(os.environ)
    full_env.pop("REALOP_SEED", None)
    full_env.update(env or {})
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=120)
    if check is not None:
        assert proc.returncode == check, proc.stderr
    return proc


def csv_rows(text):
    lines = text.strip().splitlines()
    return lines[0], [tuple(float(v) for v in line.split(",")) for line in lines[1:]]


def test_help_and_usage_errors():
    assert run("--help").returncode == 0
    assert run().returncode == 2
    assert run("numrange", "--example", "nope").returncode == 2
    assert run("numrange", "--example", "phi1", "--samples", "0").returncode == 2
    assert run("spectrum", "--example", "phi1", "--rect", "1,0,0,1").returncode == 2
    assert run("numrange", "--example", "phi1", "--format", "png").returncode == 2


def test_io_and_parse_errors(tmp_path):
    assert run("info", "--input", str(tmp_path / "missing.json")).returncode == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 1, "T": [[[1, 0]]]}')
    proc = run("info", "--input", str(bad))
    assert proc.returncode == 2
    assert "A" in proc.stderr
    out = tmp_path / "no" / "such" / "dir" / "x.csv"
    assert run("numrange", "--example", "phi1", "--out", str(out)).returncode == 3


def test_numrange_csv_is_deterministic():
    a = run("numrange", "--example", "phi2", "--samples", "500", check=0).stdout
    b = run("numrange", "--example", "phi2", "--samples", "500", check=0).stdout
    assert a == b
    header, rows = csv_rows(a)
    assert header == "re,im"
    assert len(rows) >= 3
    assert min(r[0] for r in rows) > -0.02


def test_seed_sources():
    base = run("numrange", "--example", "ex612", "--samples", "200", check=0).stdout
    explicit = run("numrange", "--example", "ex612", "--samples", "200", "--seed", "42", check=0).stdout
    assert base == explicit
    other = run("numrange", "--example", "ex612", "--samples", "200", "--seed", "7", check=0).stdout
    assert other != base
    from_env = run("numrange", "--example", "ex612", "--samples", "200", env={"REALOP_SEED": "7"}, check=0).stdout
    assert from_env == other
    flag_wins = run("numrange", "--example", "ex612", "--samples", "200", "--seed", "42",
                    env={"REALOP_SEED": "7"}, check=0).stdout
    assert flag_wins == base
    assert run("numrange", "--example", "ex612", env={"REALOP_SEED": "x"}).returncode == 2


def test_dimension_one_is_a_circle():
    proc = run("numrange", "--example", "circlet", check=0)
    assert "circle" in proc.stderr
    header, rows = csv_rows(proc.stdout)
    assert header == "center_re,center_im,radius"
    assert rows == [(1.0, 0.0, 2.0)]


def test_numrange_json_and_svg(tmp_path):
    doc = json.loads(run("numrange", "--example", "ex613", "--format", "json", "--samples", "300", check=0).stdout)
    assert doc["command"] == "numrange"
    assert {"inputs", "outputs", "duration_s"} <= doc.keys()
    svg = tmp_path / "w.svg"
    run("numrange", "--example", "phi2", "--format", "svg", "--show-disks", "--samples", "200",
        "--out", str(svg), check=0)
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    assert root.get("viewBox") == "0 0 800 800"


def test_spectrum_outputs(tmp_path):
    out = tmp_path / "conj.csv"
    proc = run("spectrum", "--example", "conjugation", "--rect=-1.1,1.1,-1.1,1.1", "--step", "0.05",
               "--tol", "0.05", "--out", str(out), check=0)
    assert "detected points:" in proc.stderr
    header, grid = csv_rows(out.read_text())
    assert header == "re,im,sigma_min"
    assert len(grid) == 45 * 45
    _, detected = csv_rows((tmp_path / "conj.csv.detected.csv").read_text())
    assert detected
    assert all(abs(math.hypot(r, i) - 1.0) <= 0.05 for r, i, _ in detected)

    empty = run("spectrum", "--example", "empty-spectrum", "--format", "json", check=0)
    doc = json.loads(empty.stdout)
    assert doc["outputs"]["detected"] == []
    assert "empty spectrum: yes" in empty.stderr

    svg = run("spectrum", "--example", "phi1", "--format", "svg", check=0).stdout
    assert ET.fromstring(svg).tag.endswith("svg")


def test_info():
    doc = json.loads(run("info", "--example", "circlet", "--format", "json", check=0).stdout)
    assert doc["outputs"]["operator_norm"] == pytest.approx(3.0)
    assert doc["outputs"]["circle"] == {"center": [1.0, 0.0], "radius": pytest.approx(2.0)}
    doc = json.loads(run("info", "--example", "identity", "--format", "json", check=0).stdout)
    out = doc["outputs"]
    assert (out["radius_lower_bound"], out["radius_upper_bound"]) == pytest.approx((0.5, 1.0))
    assert out["self_adjoint"] is True
    text = run("info", "--example", "phi1", check=0).stdout
    assert "operator_norm:" in text


def test_verify_report(tmp_path):
    out = tmp_path / "report.json"
    proc = run("verify", "--trials", "1", "--seed", "3", "--out", str(out))
    assert proc.returncode in (0, 1)
    report = json.loads(out.read_text())
    assert report["seed"] == 3
    assert (proc.returncode == 0) == report["passed"]
    assert proc.stdout.count("[PASS]") + proc.stdout.count("[FAIL]") == len(report["checks"])
