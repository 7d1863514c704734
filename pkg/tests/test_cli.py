import csv
import io
import json
import subprocess
import sys

import pytest

from ghwlab.analysis import dumps_json
from ghwlab.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_example_1_json():
    code, text = run("analyze", "--p", "3", "--m", "3", "--d-mode", "one", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert list(doc) == ["params", "code", "ghw", "bounds", "warnings", "timing"]
    assert (doc["code"]["n"], doc["code"]["k"]) == (8, 2)
    assert [doc["ghw"]["hierarchy"][r]["subcode"] for r in ("1", "2")] == [6, 8]
    assert 2 in doc["bounds"]["mds_ranks"]
    assert doc["params"]["modulus"] == [1, 0, 2, 1]


def test_json_round_trip_and_determinism():
    args = ("analyze", "--p", "7", "--m", "2", "--d-mode", "special", "--format", "json")
    _, a = run(*args)
    _, b = run(*args)
    assert a == b
    assert dumps_json(json.loads(a)) == a

    def no_floats(x):
        if isinstance(x, dict):
            return all(no_floats(v) for v in x.values())
        if isinstance(x, list):
            return all(no_floats(v) for v in x)
        return not isinstance(x, float)

    assert no_floats(json.loads(a))


def test_threads_do_not_change_output():
    base = ("analyze", "--p", "3", "--m", "5", "--d-mode", "one", "--format", "json")
    assert run(*base)[1] == run(*base, "--threads", "3")[1]


def test_degenerate():
    code, text = run("analyze", "--p", "5", "--m", "2", "--d-mode", "special", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert (doc["code"]["n"], doc["code"]["k"]) == (0, 0)
    assert doc["bounds"]["degenerate"] is True


def test_csv_columns():
    code, text = run("analyze", "--p", "7", "--m", "2", "--d-mode", "special", "--methods", "closed,subcode", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["r", "d_closed", "d_hyperplane", "d_charsum", "d_subcode", "singleton_up", "plotkin", "griesmer", "flags"]
    assert [(r["d_closed"], r["d_subcode"], r["d_hyperplane"]) for r in rows] == [("6", "6", ""), ("12", "12", "")]


def test_table_mentions_agreement():
    code, text = run("analyze", "--p", "3", "--m", "2", "--d-mode", "special")
    assert code == 0
    assert "agreement: yes" in text


def test_warnings_do_not_change_exit_code():
    code, text = run("analyze", "--p", "3", "--m", "6", "--d-mode", "one", "--methods", "closed,hyperplane,subcode", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert any("gcd" in w for w in doc["warnings"])


def test_infeasible_exit_3():
    code, _ = run("analyze", "--p", "3", "--m", "6", "--d-mode", "special", "--ceiling", "100")
    assert code == 3


def test_usage_errors_exit_64():
    with pytest.raises(SystemExit) as e:
        run("analyze", "--p", "3")
    assert e.value.code == 64
    with pytest.raises(SystemExit) as e:
        run("analyze", "--p", "3", "--m", "2", "--d-mode", "one", "--methods", "magic")
    assert e.value.code == 64
    assert run("analyze", "--p", "9", "--m", "2", "--d-mode", "one")[0] == 64
    assert run("analyze", "--p", "3", "--m", "3", "--d-mode", "special")[0] == 64


def test_env_ceiling(monkeypatch):
    monkeypatch.setenv("GHWLAB_CEILING", "10")
    assert run("analyze", "--p", "3", "--m", "4", "--d-mode", "one")[0] == 3


def test_field_and_periods_and_omega():
    code, text = run("field", "--p", "3", "--m", "1", "--histogram")
    assert code == 0 and "alpha = [2]" in text and "0:1 1:1 2:1" in text
    code, text = run("periods", "--p", "3", "--m", "2", "--N", "2")
    assert code == 0
    assert "eta_0 = 1 " in text and "eta_1 = -2 " in text and text.count("closed=brute") == 2
    code, text = run("omega", "--p", "3", "--m", "2", "--M", "4", "--a-log", "0", "--b-log", "0")
    assert code == 0 and "equal" in text
    code, text = run("omega", "--p", "7", "--m", "2", "--M", "8", "--a-log", "5")
    assert code == 0 and "equal" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ghwlab", "analyze", "--p", "3", "--m", "2", "--d-mode", "special", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("r,d_closed")


def test_verify_core_exit_0():
    code, text = run("verify", "--suite", "core")
    assert code == 0, text
    assert "EXPECTED_DISCREPANCY" in text
    assert "FAIL" not in text
