"""Tests for the command-line interface."""
import json
import subprocess
import sys

import pytest

from ncstirling.cli import main
from ncstirling.noncentral import triangle_from_json, triangle_to_json


def run_cli(*argv):
    return main(list(argv))


def test_triangle_small_json(capsys):
    assert run_cli("triangle", "--n-max", "2", "--format", "json") == 0
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["n_max"] == "2"
    entry = next(e for e in doc["entries"] if e["n"] == "2" and e["k"] == "1")
    assert entry["coeffs"] == ["-1", "-2"]


def test_triangle_order_zero(capsys):
    assert run_cli("triangle", "--n-max", "0") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["entries"] == [{"n": "0", "k": "0", "coeffs": ["1"]}]


def test_triangle_constructions_byte_identical(capsys):
    run_cli("triangle", "--n-max", "4", "--construction", "recurrence")
    recurrence_out = capsys.readouterr().out
    run_cli("triangle", "--n-max", "4", "--construction", "explicit")
    explicit_out = capsys.readouterr().out
    assert recurrence_out == explicit_out


def test_triangle_json_round_trip_is_byte_identical(tmp_path):
    out_path = tmp_path / "triangle.json"
    assert run_cli("triangle", "--n-max", "6", "--out", str(out_path)) == 0
    text = out_path.read_text()
    assert triangle_to_json(triangle_from_json(text)) == text


def test_triangle_csv(capsys):
    assert run_cli("triangle", "--n-max", "2", "--format", "csv") == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "n,k,degree,coeffs"
    assert "2,1,1,-1 -2" in lines


def test_eval_hand_values(capsys):
    assert run_cli("eval", "--n", "2", "--k", "1", "--alpha", "1") == 0
    assert capsys.readouterr().out.strip() == "-3"

    assert run_cli("eval", "--n", "5", "--k", "5", "--alpha", "7/3") == 0
    assert capsys.readouterr().out.strip() == "1"

    # (-a)(-a-1)(-a-2) vanishes at alpha = -1 and is 6 at alpha = -3
    assert run_cli("eval", "--n", "3", "--k", "0", "--alpha", "-1") == 0
    assert capsys.readouterr().out.strip() == "0"
    assert run_cli("eval", "--n", "3", "--k", "0", "--alpha", "-3") == 0
    assert capsys.readouterr().out.strip() == "6"


def test_eval_normalizes_rational_input(capsys):
    assert run_cli("eval", "--n", "2", "--k", "1", "--alpha", "6/4") == 0
    assert capsys.readouterr().out.strip() == "-4"


def test_eval_with_expansion(capsys):
    assert run_cli("eval", "--n", "1", "--k", "1", "--alpha", "0",
                   "--beta", "1", "--x0", "2") == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "1"
    assert lines[1].startswith("expansion n=1")
    assert "0.5" in lines[1]


def test_eval_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run_cli("eval", "--n", "2", "--k", "3", "--alpha", "1")
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        run_cli("eval", "--n", "2", "--k", "1", "--alpha", "1", "--beta", "1")
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        run_cli("eval", "--n", "2", "--k", "1", "--alpha", "1/0")
    assert excinfo.value.code == 2
    capsys.readouterr()


def test_verify_small_passes(capsys):
    assert run_cli("verify", "--n-max", "5") == 0
    out = capsys.readouterr().out
    assert "VERIFY: PASS" in out


def test_verify_ten_passes(capsys):
    assert run_cli("verify", "--n-max", "10") == 0
    capsys.readouterr()


def test_verify_ten_with_oracle_and_tolerance(capsys):
    assert run_cli("verify", "--n-max", "10", "--with-oracle", "--tol", "1e-6") == 0
    out = capsys.readouterr().out
    assert "expansion grid" in out
    assert "VERIFY: PASS" in out


def test_verify_smallest_suite_emits_reports(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    assert run_cli("verify", "--n-max", "1", "--out", str(out_path)) == 0
    capsys.readouterr()
    doc = json.loads(out_path.read_text())
    assert doc["seed"] == "0"
    assert len(doc["identities"]) >= 5
    assert all(r["holds"] for r in doc["identities"])
    assert all(c["ok"] for c in doc["structural"])
    assert doc["oracle"] == []


def test_verify_oracle_report_shape(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    assert run_cli("verify", "--n-max", "4", "--with-oracle", "--tol", "1e-6",
                   "--out", str(out_path)) == 0
    capsys.readouterr()
    doc = json.loads(out_path.read_text())
    assert doc["oracle"]
    record = doc["oracle"][0]
    assert set(record) == {"n", "alpha", "beta", "x0", "jet_value",
                           "expansion_value", "rel_residual", "pass"}
    assert record["pass"] is True
    assert isinstance(record["rel_residual"], str)


def test_verify_csv_summary(capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    assert run_cli("verify", "--n-max", "2", "--format", "csv",
                   "--out", str(out_path)) == 0
    capsys.readouterr()
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "identity,n,alpha,holds"
    assert any(line.startswith("binomial_stirling_sum,") for line in lines)
    assert all(line.endswith(",true") for line in lines[1:])


def test_verify_corrupt_hook_flips_exit(capsys):
    assert run_cli("verify", "--n-max", "4", "--corrupt", "3,1") == 1
    out = capsys.readouterr().out
    assert "VERIFY: FAIL" in out
    assert "FAIL" in out


def test_verify_corrupt_bad_argument(capsys):
    assert run_cli("verify", "--n-max", "2", "--corrupt", "nope") == 2
    capsys.readouterr()


def test_verify_seed_changes_sample_but_not_outcome(capsys, tmp_path):
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    assert run_cli("verify", "--n-max", "2", "--seed", "1", "--out", str(path_a)) == 0
    assert run_cli("verify", "--n-max", "2", "--seed", "2", "--out", str(path_b)) == 0
    capsys.readouterr()
    doc_a = json.loads(path_a.read_text())
    doc_b = json.loads(path_b.read_text())
    assert doc_a["seed"] == "1" and doc_b["seed"] == "2"
    assert doc_a["identities"] != doc_b["identities"]
    assert all(r["holds"] for r in doc_a["identities"] + doc_b["identities"])


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ncstirling", "eval", "--n", "2", "--k", "1",
         "--alpha", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-3"
