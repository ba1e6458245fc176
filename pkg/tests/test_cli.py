import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from wallach.cli import parse_rational, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compute_so5():
    code, text, _ = call("compute", "so", "--params", "2,2,1", "--format", "json")
    assert code == 0
    d = json.loads(text)
    assert sorted(F(x) for x in d["closed_form"]["a"]) == [F(1, 6), F(1, 3), F(1, 3)]
    assert d["closed_form_deviation"] < 1e-10
    assert d["passed"] is True
    assert d["table1_line"] == 1


@pytest.mark.parametrize("argv", [
    ("compute", "su-u", "--params", "3"),
    ("compute", "ledger-obata", "--params", "su,2"),
    ("compute", "sym-product", "--params", "3"),
    ("compute", "sp", "--params", "1,1,1", "--format", "table"),
])
def test_compute_families(argv):
    code, text, _ = call(*argv)
    assert code == 0, text


def test_classify_json():
    code, text, _ = call("classify", "5/18", "5/18", "5/18")
    assert code == 0
    d = json.loads(text)
    assert d["label"] == "O2" and d["Q_sign"] == -1
    assert d["profile"]["text"] == "1 stable node + 3 saddles"
    assert json.dumps(d, sort_keys=True, indent=2) == text.strip()


def test_classify_decimal_is_exact():
    _, a, _ = call("classify", "0.25", "0.25", "0.25")
    _, b, _ = call("classify", "1/4", "1/4", "1/4")
    assert a == b
    assert json.loads(a)["label"] == "OnOmega"
    assert json.loads(a)["Q"] == "0/1"
    assert json.loads(a)["point"] == ["1/4", "1/4", "1/4"]


def test_classify_table_and_float():
    code, text, _ = call("classify", "1/6", "1/4", "1/3", "--format", "table")
    assert code == 0 and "O3" in text
    code, text, _ = call("classify", "0.2", "0.1", "0.15", "--mode", "float")
    assert json.loads(text)["label"] == "O1"


@pytest.mark.parametrize("argv", [
    ("classify", "1/3", "abc", "1/4"),
    ("classify", "1/3", "1/0", "1/4"),
    ("compute", "so", "--params", "0,1,1"),
    ("compute", "so", "--params", "5,5,5"),
    ("compute", "g2"),
    ("compute", "so", "--params", "2,2,1", "--tol", "-1"),
    ("slice", "--a3", "3/4"),
    ("curve", "--t-min", "1/2", "--t-max", "0"),
    ("classify", "1/3", "1/3", "1/3", "--threads", "0"),
])
def test_bad_input_exits_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err.startswith("wallach: error:")


def test_argparse_errors_exit_2(capsys):
    assert call("frobnicate")[0] == 2
    assert call("catalog", "--table", "4")[0] == 2


def test_catalog_round_trip():
    code, text, _ = call("catalog", "--table", "1", "--format", "json")
    assert code == 0
    rows = json.loads(text)
    assert len(rows) == 15
    assert json.loads(json.dumps(rows)) == rows
    code, text, _ = call("catalog", "--table", "3", "--format", "table")
    assert "e8" in text and "248" in text
    code, text, _ = call("catalog", "--table", "2", "--format", "json")
    assert len(json.loads(text)) == 37


def test_slice_csv():
    code, text, _ = call("slice", "--a3", "1/4", "--grid", "64")
    assert code == 0
    assert text.splitlines()[0] == "a1_start,a2_start,a1_end,a2_end"


def test_curve_json():
    code, text, _ = call("curve", "--t-min", "1/5", "--t-max", "1/4", "--steps", "2", "--format", "json")
    rows = json.loads(text)
    assert [r["t"] for r in rows] == ["1/5", "9/40", "1/4"]
    assert rows[0]["a1"] == "41/170"
    assert all(r["Q"] == "0/1" and r["inside"] for r in rows)


def test_curve_skips_pole():
    # 8 t^2 = 1 falls between samples here, so every row is a finite point
    code, text, _ = call("curve", "--t-min", "0", "--t-max", "1/2")
    assert code == 0
    assert len(text.splitlines()) == 12


def test_threads_env(monkeypatch):
    monkeypatch.setenv("WALLACH_NUM_THREADS", "1")
    assert call("compute", "su", "--params", "2,1,1")[0] == 0
    monkeypatch.setenv("WALLACH_NUM_THREADS", "many")
    assert call("compute", "su", "--params", "2,1,1")[0] == 2


def test_threads_flag_before_subcommand():
    assert call("--threads", "2", "compute", "su", "--params", "2,1,1")[0] == 0


def test_parse_rational():
    assert parse_rational("0.1") == F(1, 10)
    assert parse_rational("-3/4") == F(-3, 4)
    assert parse_rational("1e-3") == F(1, 1000)


def test_verify_all_only_line_swap_fails():
    code, text, _ = call("verify-all", "--format", "json")
    assert code == 1
    failed = [r["criterion"] for r in json.loads(text) if not r["passed"]]
    assert failed == [7]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wallach", "classify", "1/6", "1/6", "1/6"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["label"] == "O1"
