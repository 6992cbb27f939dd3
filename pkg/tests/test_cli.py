import io
import json
import subprocess
import sys

import pytest

from qzeta.cli import run


def call(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    return run(list(argv))


def test_brieskorn_text():
    code, out, err = run(["brieskorn", "--p", "2", "--q", "3", "--r", "5"])
    assert code == 0 and not err
    assert "mu       = 8" in out


def test_curve_fig7_row():
    code, out, _ = run(["curve", "--space", "X(6;3,2)", "--germ", "x^2 y^3 (x^2+y^3)", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == "4"
    assert data["zeta"]["factors"] == [{"m": "3", "e": -1}]


def test_curve_rational_row_json_uses_strings():
    code, out, _ = run(["curve", "--space", "X(6;3,2)", "--germ", "x y (x^2+y^3)", "--json"])
    data = json.loads(out)
    assert data["mu"] == "17/6" and data["chi_fiber"] == "-11/6"
    assert data["delta"] is None and "delta" in data["absent"]


def test_strata_round_trip(tmp_path, monkeypatch):
    _, out, _ = run(["puiseux2", "--p1", "3", "--q1", "2", "--p2", "5", "--q2", "3", "--json", "--expand", "--lefschetz", "1..12"])
    first = json.loads(out)
    _, again, _ = call("strata", "--input", "-", "--json", "--expand", "--lefschetz", "1..12", stdin=out, monkeypatch=monkeypatch)
    second = json.loads(again)
    for key in ("n", "strata", "zeta", "delta", "mu", "chi_fiber", "delta_expanded", "lefschetz"):
        assert first[key] == second[key]
    path = tmp_path / "s.json"
    path.write_text(again)
    _, third, _ = run(["strata", "--input", str(path), "--json", "--expand", "--lefschetz", "1..12"])
    assert third == again


def test_strata_text_with_lefschetz(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"n": 1, "strata": [{"m": 12, "chi": -2}, {"m": 12, "ell": 3, "chi": 1}, {"m": 12, "ell": 2, "chi": 1}]}))
    code, out, _ = run(["strata", "--input", str(path), "--lefschetz", "1..12", "--expand"])
    assert code == 0
    assert "Lambda(h^4) = 4" in out and "Lambda(h^12) = -14" in out


def test_deterministic_output():
    argv = ["yomdin", "--m", "3", "--k", "1", "--p", "2", "--q", "3", "--json", "--expand"]
    assert run(argv) == run(argv)
    data = json.loads(run(argv)[1])
    assert data["mu"] == "10"


def test_yomdin_default_chi():
    _, out, _ = run(["yomdin", "--m", "3", "--k", "1", "--p", "2", "--q", "3"])
    assert "chi(P^2 - C)=1" in out


def test_normalize():
    code, out, _ = run(["normalize", "--space", "X(4;2,1)", "--json"])
    data = json.loads(out)
    assert data["normalized"] == "X(2;1,1)" and data["transport"] == ["1", "1/2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--brieskorn", "2,3,5"],
        ["check", "--brieskorn", "4,6,10"],
        ["check", "--puiseux2", "3,2,5,3"],
    ],
)
def test_check_passes(argv):
    code, out, _ = run(argv)
    assert code == 0 and "FAIL" not in out


def test_domain_errors_exit_1():
    code, out, err = run(["curve", "--germ", "x^2 y + x y^3 + x^5"])
    assert code == 1 and out == "" and "not a binomial" in err
    code, out, err = run(["curve", "--germ", "x^-2 + y"])
    assert code == 1 and out == "" and "negative" in err
    code, _, err = run(["strata", "--input", "/nonexistent.json"])
    assert code == 1 and "cannot read" in err


def test_usage_errors_exit_2(capsys):
    assert run(["brieskorn", "--p", "2"])[0] == 2
    assert run(["strata", "--input", "x", "--lefschetz", "5..1"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qzeta", "brieskorn", "--p", "2", "--q", "2", "--r", "2", "--expand"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "= 1 + t" in proc.stdout
