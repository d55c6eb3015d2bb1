import csv
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from frobessel.cli import ParseFailure, format_value, main, parse_complex, parse_grid


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# parsing ---------------------------------------------------------------------------

@pytest.mark.parametrize("text, value", [
    ("1.5", 1.5), ("2i", 2j), ("i", 1j), ("-i", -1j), ("1+2i", 1 + 2j),
    ("0.3-0.8i", 0.3 - 0.8j), ("1e-3", 1e-3), ("-2.5e1+1e0i", -25 + 1j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1 + 2i", "2j", "nan", "inf", "1+"])
def test_parse_complex_rejects(text):
    with pytest.raises(ParseFailure):
        parse_complex(text)


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
def test_format_parse_round_trip(re, im):
    z = complex(re, im)
    back = parse_complex(format_value(z))
    assert abs(back - z) <= 1e-13 * max(1.0, abs(z))


def test_format_value():
    assert format_value(0.5 + 1e-20j) == "0.5"
    assert format_value(1 - 2j) == "1-2i"
    assert format_value(7) == "7"


def test_parse_grid():
    axes = parse_grid("n=0:2:3,z=0.5:1:2")
    assert axes == [("n", [0.0, 1.0, 2.0]), ("z", [0.5, 1.0])]
    for bad in ("", "n=0:1", "n=0:1:x", "n=0:1:2,n=0:1:2", "n=0:1:0"):
        with pytest.raises(ParseFailure):
            parse_grid(bad)


# eval ------------------------------------------------------------------------------

@pytest.mark.parametrize("argv, expected", [
    (["bessel_j", "0", "1.0"], "0.765197686557967"),
    (["lambda_modular", "i"], "0.5"),
    (["moebius", "30"], "-1"),
    (["totient", "36"], "12"),
    (["cross_ratio", "2", "0", "1", "inf"], "-1"),
    (["gamma", "5"], "24"),
    (["gauss_2f1", "1", "1", "2", "0.5"], "1.38629436111989"),
    (["group_determinant", "3", "2"], "5"),
    (["elliptic_K", "0.5"], "1.85407467730137"),
])
def test_eval_values(argv, expected, capsys):
    code, out, _ = run(["eval"] + argv, capsys)
    assert code == 0
    assert out.strip() == expected


def test_eval_complex_output(capsys):
    code, out, _ = run(["eval", "bessel_j", "0", "1+i"], capsys)
    assert code == 0
    assert parse_complex(out.strip()) == pytest.approx(0.93760847680602928 - 0.49652994760912213j, abs=1e-14)


def test_eval_unknown_function(capsys):
    code, _, err = run(["eval", "no_such", "1"], capsys)
    assert code == 2 and "no_such" in err


@pytest.mark.parametrize("argv", [["bessel_j", "x", "1"], ["bessel_j", "0"], ["bessel_j", "0.5", "1"]])
def test_eval_parse_failure(argv, capsys):
    code, _, _ = run(["eval"] + argv, capsys)
    assert code == 3


@pytest.mark.parametrize("argv, needle", [
    (["gamma", "-2"], "pole"),
    (["gauss_2f1", "1", "1", "2", "1.5"], "|z| < 1"),
    (["lambda_modular", "-1i"], "positive imaginary"),
    (["john_xa_closed_form", "0.5", "0.5", "0.5", "1", "2", "3", "1"], "alpha2"),
])
def test_eval_domain_error(argv, needle, capsys):
    code, _, err = run(["eval"] + argv, capsys)
    assert code == 4
    assert needle in err


# verify ----------------------------------------------------------------------------

def test_verify_single_suite(capsys):
    code, out, _ = run(["verify", "frobenius"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["suite_name"] == "frobenius" and doc["passed"]
    ids = [c["check_id"] for c in doc["checks"]]
    assert ids == sorted(ids)
    assert set(doc["checks"][0]) == {"check_id", "max_residual", "tolerance", "passed", "note"}


def test_verify_unknown_suite(capsys):
    code, _, _ = run(["verify", "nope"], capsys)
    assert code == 2


def test_verify_failed_checks_exit_one(capsys, monkeypatch):
    # a loose quadrature tolerance makes the tight checks fail, reported not raised
    monkeypatch.setenv("FB_TOL", "1e-3")
    code, out, _ = run(["verify", "theta"], capsys)
    assert code == 1
    doc = json.loads(out)
    assert not doc["passed"]
    failed = [c for c in doc["checks"] if not c["passed"]]
    assert any(c["max_residual"] is None and c["note"].startswith("raised") for c in failed)


def test_verify_seed_changes_inputs(capsys):
    _, a, _ = run(["verify", "john", "--seed", "0"], capsys)
    _, b, _ = run(["verify", "john", "--seed", "1"], capsys)
    assert a != b


def test_bad_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("FB_TOL", "abc")
    code, _, err = run(["eval", "gamma", "2"], capsys)
    assert code == 3 and "FB_TOL" in err


# table -----------------------------------------------------------------------------

def test_table_csv(tmp_path, capsys):
    path = tmp_path / "j.csv"
    code, _, _ = run(["table", "bessel_j", "n=0:1:2,z=0:2:3", str(path)], capsys)
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["n", "z", "value"]
    assert len(rows) == 7
    assert float(rows[1][2]) == 1.0


def test_table_tau_axis(tmp_path, capsys):
    path = tmp_path / "lam.csv"
    code, _, _ = run(["table", "lambda_modular", "tau_im=1:2:3", str(path)], capsys)
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["tau_im", "value"]
    assert abs(float(rows[1][1]) - 0.5) < 1e-12


def test_table_complex_columns(tmp_path, capsys):
    path = tmp_path / "g.csv"
    code, _, _ = run(["table", "bessel_j", "n=0:0:1,z=1:1:1", str(path)], capsys)
    assert code == 0
    assert path.read_text().splitlines()[0] == "n,z,value"


@pytest.mark.parametrize("grid", ["n=0:1", "q=0:1:2", "n=0.5:1:2,z=0:1:2"])
def test_table_parse_failure(grid, tmp_path, capsys):
    code, _, _ = run(["table", "bessel_j", grid, str(tmp_path / "x.csv")], capsys)
    assert code == 3


def test_table_unwritable(tmp_path, capsys):
    code, _, err = run(["table", "bessel_j", "n=0:1:2,z=0:1:2", str(tmp_path / "missing" / "x.csv")], capsys)
    assert code == 5 and "cannot write" in err


def test_table_unknown_function(tmp_path, capsys):
    code, _, _ = run(["table", "nope", "x=0:1:2", str(tmp_path / "x.csv")], capsys)
    assert code == 2


# process entry points ----------------------------------------------------------------

def test_usage_error_exit_code():
    out = subprocess.run([sys.executable, "-m", "frobessel", "frobnicate"], capture_output=True)
    assert out.returncode == 3


def test_version():
    out = subprocess.run([sys.executable, "-m", "frobessel", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("frobessel ")
