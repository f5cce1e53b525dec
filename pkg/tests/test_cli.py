import json
import subprocess
import sys

import pytest

from ktdual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pairing_trivial_dim3(capsys):
    code, out, _ = run(capsys, "pairing", "--group", "c1", "--rep", "3*triv", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["gram"] == [["1", "1", "1"], ["1", "1", "0"], ["1", "0", "0"]]
    assert doc["perfect"] is True


def test_pairing_c2(capsys):
    code, out, _ = run(capsys, "pairing", "--group", "c2", "--rep", "triv+sigma", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"group", "rep", "n", "sigma", "gram", "perfect", "inverse"}
    assert doc["gram"] == [["1", "1"], ["1", "1-sigma"]]
    assert doc["inverse"] == [["1-sigma", "sigma"], ["sigma", "-sigma"]]


def test_pairing_text_layout(capsys):
    code, out, _ = run(capsys, "pairing", "--group", "c2", "--rep", "triv+sigma")
    lines = out.splitlines()
    assert lines[0].split("|")[1:] == [" 1 ", " y"]
    assert "1-sigma" in lines[3]


def test_generic_tables(capsys):
    code, out, _ = run(capsys, "pairing", "--dim", "3", "--format", "json")
    assert json.loads(out)["gram"][2][2] == "1-δ*(4-V*)"
    code, out, _ = run(capsys, "pairing", "--dim", "4", "--format", "latex")
    assert "$1-\\delta^*(15-6V^*+(V^*)^{2}-\\lambda^{2}(V^*))$" in out
    assert "% <y^3,y^3>" in out and "14" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--group", "s3", "--rep", "triv+std")
    assert code == 0
    for line in out.splitlines():
        assert json.loads(line)["passed"] is True


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "perfection")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["suite"] == "perfection"


@pytest.mark.parametrize(
    "argv",
    [
        ["pairing", "--group", "nope", "--rep", "triv"],
        ["pairing", "--group", "s3", "--rep", "xyz"],
        ["pairing", "--group", "s3"],
        ["pairing", "--group", "c2", "--rep", "triv-sigma"],
        ["flags", "--group", "s3", "--rep", "std"],
        ["verify", "--suite", "bogus"],
        ["pairing", "--dim", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("ktdual: error:")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["pairing", "--format", "yaml"])
    assert exc.value.code == 2


def test_other_subcommands(capsys):
    code, out, _ = run(capsys, "sigma", "--group", "s3", "--rep", "triv+std", "--format", "json")
    assert json.loads(out)["sigma"] == ["-2+std", "1+sign-std", "0"]
    code, out, _ = run(capsys, "euler", "--group", "c2", "--rep", "triv+sigma", "--format", "json")
    assert json.loads(out)["euler_z"] == {"0": "1", "1": "-1-sigma", "2": "sigma"}
    code, out, _ = run(capsys, "fundamental", "--group", "q8", "--rep", "rho", "--format", "json")
    doc = json.loads(out)
    assert doc["coordinates"] == ["1", "1"] and doc["values"] == ["1", "1"]
    code, out, _ = run(capsys, "flags", "--group", "c5", "--rep", "z+z2+z3+z4", "--format", "json")
    assert json.loads(out) == {
        "flag_count": 24,
        "independent": True,
        "equals_fundamental": True,
        "sum_coordinates": ["1", "1", "1", "1"],
    }
    code, out, _ = run(capsys, "flags", "--group", "c2", "--rep", "2*triv+sigma", "--list", "--format", "json")
    assert json.loads(out)["flag_count"] == 3
    code, out, _ = run(capsys, "group", "--group", "d4")
    assert out.startswith("D4: order 8")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "t.txt"
    code, out, _ = run(capsys, "pairing", "--dim", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert "1-δ*" in target.read_text(encoding="utf-8")


def test_table_path_env(monkeypatch, capsys, tmp_path):
    from pathlib import Path

    src = Path(__file__).parent / "data" / "q8.json"
    (tmp_path / "quat.json").write_text(src.read_text())
    monkeypatch.setenv("KTDUAL_TABLE_PATH", str(tmp_path))
    code, out, _ = run(capsys, "sigma", "--group", "quat", "--rep", "rho")
    assert code == 0 and "sigma_2" in out


def test_deterministic_output():
    argv = [sys.executable, "-m", "ktdual", "verify", "--group", "c4", "--rep", "z+z3", "--seed", "3"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_smax_flag(capsys):
    code, out, _ = run(capsys, "pairing", "--group", "c3", "--rep", "omega+omega2+triv", "--smax", "0", "--format", "json")
    assert code == 0 and json.loads(out)["perfect"]
