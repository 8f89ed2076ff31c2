import json
import subprocess
import sys

import pytest

from kronecker.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seq(capsys):
    assert run(capsys, "seq", "--n", "3", "--kind", "A", "--upto", "5")[:2] == (0, "0 1 3 8 21 55\n")
    assert run(capsys, "seq", "--n", "4", "--kind", "B", "--upto", "7")[1] == "0 1 1 3 4 11 15 41\n"
    assert run(capsys, "seq", "--n", "3", "--kind", "s", "--upto", "5")[1] == "1 7 48\n"


def test_root_classify(capsys):
    assert run(capsys, "root", "classify", "--n", "3", "--vec", "5,1")[1] == "NonRoot q=11\n"


def test_orbit_negative_range(capsys):
    code, out, _ = run(capsys, "orbit", "--n", "3", "--vec", "8,7", "--range", "-1..1")
    assert code == 0
    assert out.splitlines() == ["-1 13,32 Imaginary q=-55", "0 8,7 Imaginary q=-55", "1 43,17 Imaginary q=-55"]


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--n", "3", "--seed", "8,7", "--length", "60")
    assert code == 0
    assert out.splitlines() == ["length 60 count 2", "(1,1) 43,17", "(-1,2) 21,39"]
    code, out, _ = run(capsys, "census", "--n", "3", "--seed", "8,7", "--length", "60", "--json")
    data = json.loads(out)
    assert data["count"] == 2
    assert {tuple(h["node"]): tuple(h["dim"]) for h in data["hits"]} == {(-1, 2): (21, 39), (1, 1): (43, 17)}


def test_pairs(capsys):
    code, out, _ = run(capsys, "pairs", "--n", "3", "--r", "1", "--s", "2", "--max-i", "2", "--json")
    ws = json.loads(out)
    assert [(w["i"], w["seed"], w["length"]) for w in ws] == [(1, [8, 7], 60), (2, [41, 79], 825)]


def test_dimset(capsys):
    assert run(capsys, "dimset", "--n", "3", "--seedA", "8,7", "--seedB", "43,17")[1] == "true\n"
    assert run(capsys, "dimset", "--n", "3", "--seedA", "8,7", "--seedB", "7,8")[1] == "false\n"


def test_ql(capsys):
    out = run(capsys, "ql", "--n", "3", "--vec", "21,39")[1]
    assert out.splitlines() == ["r=1 seed=21,39 layer=21,39", "r=2 seed=7,13 layer=39,96"]


@pytest.mark.parametrize("root", ["1,1", "7,3", "2,3", "5,5"])
def test_brick_json_round_trip(capsys, tmp_path, root):
    rep, cert = tmp_path / "rep.json", tmp_path / "cert.json"
    code, out, _ = run(capsys, "brick", "--n", "3", "--vec", root, "--out", str(rep), "--cert", str(cert), "--verify")
    assert code == 0 and "end_dim 1" in out
    assert json.loads(cert.read_text())["verified"] is True
    assert run(capsys, "homdim", "--rep1", str(rep), "--rep2", str(rep))[:2] == (0, "1\n")


@pytest.mark.parametrize("argv", [
    ["seq", "--n", "2", "--kind", "A", "--upto", "3"],
    ["root", "classify", "--n", "3", "--vec", "5"],
    ["root", "classify", "--n", "3", "--vec", "a,b"],
    ["census", "--n", "3", "--seed", "3,1", "--length", "5"],
    ["brick", "--n", "3", "--vec", "1,0"],
    ["verify", "--suite", "nope"],
    ["homdim", "--rep1", "/nonexistent.json", "--rep2", "/nonexistent.json"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_suites(capsys):
    code, out, err = run(capsys, "verify", "--suite", "identities", "--n", "3..6", "--upto", "25")
    assert code == 0 and "failures 0" in out
    assert "s" in err  # timing goes to stderr
    code, out, _ = run(capsys, "verify", "--suite", "beta", "--n", "3", "--seed-bound", "4",
                       "--length-bound", "60", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["info"]["max_count"] == 2
    for suite in ("pairs", "dimset"):
        assert run(capsys, "verify", "--suite", suite)[0] == 0
    assert run(capsys, "verify", "--suite", "bricks", "--n", "3..4", "--sum-bound", "12")[0] == 0
    assert run(capsys, "verify", "--suite", "inequalities", "--n", "3", "--upto", "10")[0] == 0


def test_theorem_violation_exit_code(capsys, monkeypatch):
    from kronecker import components
    from kronecker.errors import TheoremViolation

    def boom(seed, d):
        raise TheoremViolation("three nodes of one length")

    monkeypatch.setattr(components, "length_census", boom)
    code, _, err = run(capsys, "census", "--n", "3", "--seed", "8,7", "--length", "60")
    assert code == 3 and "theorem violation" in err


def test_construction_failure_exit_code(capsys, monkeypatch):
    from kronecker import bricks
    from kronecker.errors import ConstructionError

    def boom(n, root, method="auto"):
        raise ConstructionError("end_dim 2", [{"case": 2}])

    monkeypatch.setattr(bricks, "construct_brick", boom)
    assert run(capsys, "brick", "--n", "3", "--vec", "1,1")[0] == 4


def test_deterministic_stdout():
    argv = [sys.executable, "-m", "kronecker.cli", "verify", "--suite", "pairs", "--json"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second and json.loads(first)["ok"]
