import json

import pytest

from colhopf.cli import expected_count, run
from colhopf.groups import parse_group


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_connected_check_passes(capsys):
    code, out, _ = call(capsys, "check", "--relation", "D", "--stat", "descent", "--n", "5", "--group", "triv")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"command", "params", "results", "verdict"}
    assert rep["verdict"] == "PASS"


def test_ep_induction_failure_and_replay(capsys, tmp_path):
    path = tmp_path / "ep.json"
    code, _, _ = call(capsys, "check", "--property", "IP", "--stat", "EP", "--n", "1", "--m", "2",
                      "--group", "triv", "--output", str(path))
    assert code == 1
    rep = json.loads(path.read_text())
    assert rep["results"][0]["witness"]["missing"] == [3, 2, 1]
    code, out, _ = call(capsys, "check", "--replay", str(path))
    assert code == 1
    assert json.loads(out)["results"][0]["reproduced"] is True


def test_dims_table(capsys):
    code, out, _ = call(capsys, "dims", "--stat", "IP", "--group", "Z2", "--nmax", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["degree,computed,expected,verdict", "1,2,2,PASS", "2,4,4,PASS", "3,10,10,PASS"]


def test_expected_counts():
    Z2 = parse_group("Z2")
    assert [expected_count("T", n, Z2) for n in range(1, 5)] == [2, 6, 20, 70]
    assert [expected_count("D", n, Z2) for n in range(1, 4)] == [2, 6, 18]
    assert expected_count("DESB", 3, Z2) == 8


def test_output_is_deterministic(capsys):
    argv = ("closure", "--stat", "IP", "--group", "Z2", "--nmax", "3")
    first = call(capsys, *argv)[1]
    assert first == call(capsys, *argv)[1]


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    ("check", "--group", "Q8", "--relation", "D", "--stat", "D", "--n", "3"),
    ("check", "--n", "3"),
    ("classes", "--relation", "D", "--n", "9"),
    ("check", "--relation", "D", "--stat", "no-such-stat", "--n", "3"),
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_force_prints_estimate(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, _, err = call(capsys, "classes", "--stat", "D", "--n", "8", "--force", "--format", "csv", "--output", str(path))
    assert code == 0
    assert "40320 elements" in err
    assert path.read_text().count("\n") == 40321


def test_other_verbs(capsys):
    assert call(capsys, "constants", "--stat", "D", "--n", "2")[0] == 0
    assert call(capsys, "constants", "--stat", "EP", "--mode", "external", "--n", "1", "--m", "2")[0] == 1
    assert call(capsys, "theta", "--group", "Z2", "--nmax", "3")[0] == 0
    assert call(capsys, "theta", "--nmax", "2", "--scalar", "1")[0] == 1
    assert call(capsys, "qsym", "--group", "Z2", "--nmax", "3", "--zeta", "evaluation")[0] == 0
    assert call(capsys, "qsym", "--group", "Z2", "--nmax", "2")[0] == 1
    assert call(capsys, "odd", "--group", "Z2", "--nmax", "3")[0] == 0
    assert call(capsys, "hopf-axioms", "--group", "Z2", "--nmax", "2")[0] == 0
    assert call(capsys, "check", "--coincide", "TOY12", "--n", "4", "--group", "Z2")[0] == 1
    assert call(capsys, "check", "--psi", "IP", "--n", "3")[0] == 0
    code, out, _ = call(capsys, "classes", "--relation", "IP", "--n", "3")
    assert code == 0 and json.loads(out)["results"][0]["blocks"] == 2
