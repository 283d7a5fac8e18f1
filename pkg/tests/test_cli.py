import csv
import io
import json
import subprocess
import sys

import pytest

from qpp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_json_schema():
    code, text = run("verify", "--order", "12", "--id", "gordon", "--id", "blorank", "--format", "json")
    assert code == 0
    reports = json.loads(text)
    assert [r["id"] for r in reports] == ["gordon", "blorank"]
    for r in reports:
        assert set(r) == {"id", "pass", "order", "first_mismatch", "elapsed_ms"}
        assert r["pass"] is True and r["first_mismatch"] is None
    assert reports[0]["order"] == 12 and reports[1]["order"] == 8


def test_verify_csv_and_text():
    code, text = run("verify", "--order", "10", "--id", "jtp", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["id", "pass", "order", "m", "n", "lhs", "rhs", "elapsed_ms"]
    assert rows[1][:3] == ["jtp", "true", "10"]
    code, text = run("verify", "--order", "10", "--id", "psi")
    assert text.startswith("PASS psi order=10")
    assert text.rstrip().endswith("1/1 checks passed")


def test_verify_unknown_id_is_a_usage_error():
    assert run("verify", "--id", "nosuch")[0] == 2


def test_bad_arguments_exit_2():
    assert run("verify", "--order", "0")[0] == 2
    assert run("verify", "--format", "xml")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("coeff", "--m", "0")[0] == 2
    assert run("coeff", "--m", "0", "--n", "9", "--order", "5")[0] == 2


def test_env_default_order(monkeypatch):
    monkeypatch.setenv("QPP_DEFAULT_ORDER", "7")
    code, text = run("series", "euler")
    assert code == 0
    assert text.strip() == "1, -1, -1, 0, 0, 1, 0, 1"
    monkeypatch.setenv("QPP_DEFAULT_ORDER", "seven")
    assert run("series", "euler")[0] == 2


def test_series_examples():
    assert run("series", "spt", "--order", "4")[1].strip() == "0, 1, 3, 5, 10"
    assert run("series", "--name", "eta:1^4,2^-2", "--order", "5")[1].strip() == "1, -4, 4, 0, 4, -8"
    assert run("series", "partitions", "--order", "5")[1].strip() == "1, 1, 2, 3, 5, 7"
    code, text = run("series", "theta-1", "--order", "2")
    assert text.splitlines() == ["q^(1/24) *", "1, -5, 7"]
    assert run("series", "nosuch")[0] == 2


def test_series_json_and_bivariate_text():
    code, text = run("series", "quintuple", "--order", "1", "--format", "json")
    data = json.loads(text)
    assert data["order"] == 1 and data["offset"] is None
    assert {"m": -1, "n": 0, "num": "-1", "den": "1"} in data["coefficients"]
    code, text = run("series", "quintuple", "--order", "1")
    assert text.splitlines()[0] == "q^0: -z^-1 + 1"


def test_ntable_dump_and_guard():
    code, text = run("ntable", "--n", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["r", "s", "m", "n", "count"]
    # four overpartition pairs of 1
    assert sum(int(r[4]) for r in rows[1:]) == 4
    assert run("ntable", "--n", "13")[0] == 2
    assert run("ntable", "--n", "0")[0] == 2


def test_coeff_command():
    code, text = run("coeff", "--m", "0", "--n", "0")
    assert code == 0
    assert text.splitlines() == ["series     1", "prediction 1", "multisum   1", "agree"]
    code, text = run("coeff", "--m", "-2", "--n", "1", "--format", "json")
    rec = json.loads(text)
    assert rec["series"] == {"num": "-1", "den": "1"} and rec["agree"] is True
    code, text = run("coeff", "--m", "0", "--n", "3", "--format", "csv")
    assert text.splitlines()[1] == "0,3,0,0,0,true"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qpp", "series", "euler", "--order", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1, -1, -1, 0, 0, 1"


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_every_format_renders_each_named_series(fmt):
    for name in ("euler", "gordon", "psi", "jtp", "theta-shimura", "overpartition-pairs", "pair-sum"):
        code, text = run("series", name, "--order", "3", "--format", fmt)
        assert code == 0 and text
