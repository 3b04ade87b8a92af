import os
import subprocess
import sys

import pytest

from ocpower.cli import run

MACHINES = os.path.join(os.path.dirname(__file__), "..", "machines")


def p2_path():
    return os.path.join(MACHINES, "p2.kcm")


def test_accept_exit_codes(capsys):
    assert run(["accept", "--machine", p2_path(), "--word", "001"]) == 0
    assert run(["accept", "--machine", p2_path(), "--word", "010"]) == 1


def test_build_sn_2_unsupported(capsys):
    assert run(["build-sn", "--n", "2"]) == 4


def test_missing_machine_file(capsys):
    assert run(["accept", "--machine", "nope.kcm", "--word", "0"]) == 3


def test_malformed_machine_file(tmp_path, capsys):
    bad = tmp_path / "bad.kcm"
    bad.write_text("not a machine\n")
    assert run(["accept", "--machine", str(bad), "--word", "0"]) == 3


def test_usage_error(capsys):
    assert run(["no-such-command"]) == 2
    assert run(["pair", "--n", "1"]) == 2


def test_pair_unpair(capsys):
    assert run(["pair", "--n", "2", "--p", "1"]) == 0
    assert capsys.readouterr().out.strip() == "7"
    assert run(["unpair", "--q", "7"]) == 0
    assert capsys.readouterr().out.strip() == "2 1"


def test_eraser_modes(capsys):
    assert run(["eraser", "eval", "--mode", "tilde", "--word", "aBSBSb"]) == 0
    assert capsys.readouterr().out.strip() == "b"
    assert run(["eraser", "eval", "--mode", "approx", "--word",
                "aBSBSb"]) == 0
    assert capsys.readouterr().out.strip() == "UNDERFLOW"


def test_encode_decode_round_trip(capsys):
    assert run(["encode-g", "--N", "1", "--l", "1", "--prefix", "ab"]) == 0
    word = capsys.readouterr().out.strip()
    assert run(["decode-g", "--word", word]) == 0
    assert capsys.readouterr().out.strip() == "N=1 l=1 prefix=ab"


def test_phi_round_trip(capsys):
    assert run(["phi", "encode", "--l", "0", "--alpha", "011010"]) == 0
    word = capsys.readouterr().out.strip()
    assert run(["phi", "decode", "--l", "0", "--word", word]) == 0
    assert capsys.readouterr().out.strip() == "011010"


def test_factorize(capsys):
    assert run(["factorize", "--word", "0101", "--oracle", "p2"]) == 0
    out = capsys.readouterr().out
    assert "cuts 2" in out


def test_upword(capsys):
    assert run(["upword", "--period", "01", "--base", "p2"]) == 0
    assert run(["upword", "--stem", "1", "--period", "0",
                "--base", "p2"]) == 1
    p1 = os.path.join(MACHINES, "p1.kcm")
    assert run(["upword", "--period", "0", "--machine", p1]) == 0
    out = capsys.readouterr().out
    assert "certificate" in out


def test_classify(tmp_path, capsys):
    f = tmp_path / "factors.txt"
    f.write_text("023\n323\n")
    assert run(["classify", "--factors", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "MuPower"
    assert run(["classify", "--factors", str(tmp_path / "nope.txt")]) == 3


def test_enumerate(capsys):
    assert run(["enumerate", "--machine", p2_path(), "--max-len", "3"]) == 0
    assert capsys.readouterr().out.split() == ["1", "01", "001"]


def test_build_pn_writes_machine(tmp_path, capsys):
    out = tmp_path / "p3.kcm"
    assert run(["build-pn", "--n", "3", "--out", str(out)]) == 0
    assert run(["accept", "--machine", str(out), "--word", "1"]) == 1
    text = capsys.readouterr().out
    assert "stage" in text


def test_entry_point_subprocess():
    res = subprocess.run([sys.executable, "-m", "ocpower.cli", "unpair",
                          "--q", "0"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "0 0"
