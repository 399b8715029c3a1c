from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from zeroforce.cli import main

NET_EDGES = "6 6\n0 1\n1 2\n2 3\n2 4\n4 5\n4 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_path(capsys):
    code, out, _ = run(capsys, "poly", "P4")
    assert code == 0 and out.splitlines()[0] == "z: 0 2 6 4 1"


def test_poly_json_and_workers(capsys):
    _, a, _ = run(capsys, "poly", "C8", "--json")
    _, b, _ = run(capsys, "poly", "C8", "--json", "--workers", "4")
    assert a == b
    assert json.loads(a)["z"][0] == 0


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "C6", "--json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_threshold_and_star_specs(capsys):
    code, out, _ = run(capsys, "structure", "icci", "--json")
    assert code == 0 and json.loads(out)["threshold"] == "icci"
    code, out, _ = run(capsys, "structure", "S4", "--json")
    assert json.loads(out)["leaves"] == [1, 2, 3]


def test_spantree_net(capsys, tmp_path):
    f = tmp_path / "net.txt"
    f.write_text(NET_EDGES)
    code, out, _ = run(capsys, "spantree", "--edges", str(f))
    assert code == 1
    assert "no dominating spanning tree" in out
    assert out.count("fails at i") == 3


def test_fort(capsys):
    code, out, _ = run(capsys, "fort", "C4", "--bound", "2", "--json")
    assert code == 0 and json.loads(out)["fort"] == [0, 2]
    code, out, _ = run(capsys, "fort", "C4", "--criterion")
    assert code == 0 and "yes" in out


@pytest.mark.parametrize("argv", [
    ["lemma", "leaf", "P5"],
    ["lemma", "hanging-cycle", "C5"],
    ["lemma", "hanging-cycle", "C5", "--anchor", "0,1", "--interior", "4,3,2"],
    ["lemma", "simplicial", "K4", "--vertex", "0", "--remove", "1-2,2-3"],
    ["lemma", "cone", "P3"],
    ["lemma", "hanging-paths", "S5"],
    ["lemma", "hanging-paths", "S5", "--vertex", "0", "--A", "1", "--B", "2"],
    ["lemma", "tree-strict", "S6"],
    ["lemma", "wedge-cycle-path", "K3", "--vertex", "1", "--length", "4"],
    ["lemma", "path-union", "--m", "2", "--n", "3"],
])
def test_lemmas_pass(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0, out
    assert json.loads(out)["passed"] is True


@pytest.mark.parametrize("argv", [
    ["poly", "X3"],
    ["poly", "P40"],
    ["poly", "C2"],
    ["poly"],
    ["poly", "P3", "--edges", "x.txt"],
    ["poly", "--edges", "/nonexistent/file"],
    ["lemma", "leaf", "C5"],
    ["lemma", "tree-strict", "P5"],
    ["lemma", "wedge-cycle-path", "P3"],
    ["nosuchcommand"],
    ["census", "7"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_g6_with_index(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Bw\nB?\n")
    code, out, _ = run(capsys, "poly", "--g6", str(f), "--index", "1")
    assert out.splitlines()[0] == "z: 0 0 0 1"
    code, _, err = run(capsys, "poly", "--g6", str(f), "--index", "5")
    assert code == 2 and "out of range" in err


def test_census_and_poset(capsys, tmp_path):
    out_csv = tmp_path / "c.csv"
    code, out, _ = run(capsys, "census", "5", "--out", str(out_csv))
    assert code == 0 and "34 graphs" in out
    code, out, _ = run(capsys, "poset", str(out_csv), "--json")
    data = json.loads(out)
    assert code == 0 and data["path_is_maximum"] and data["path_class_singleton"]
    assert "hasse" in data


def test_census_ingest_bad_file(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\n!!\n")
    code, _, err = run(capsys, "census", "--in", str(f))
    assert code == 2 and "line 2" in err


def test_census_ingest_fixture_head(capsys, tmp_path):
    f = tmp_path / "few.g6"
    f.write_text("\n".join((FIXTURES / "graphs7.g6").read_text().splitlines()[:20]) + "\n")
    code, out, _ = run(capsys, "census", "--in", str(f))
    assert code == 0 and len(out.splitlines()) == 21


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "zeroforce.cli", "poly", "P4"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("z: 0 2 6 4 1")
