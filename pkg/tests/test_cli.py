from __future__ import annotations

import json

import pytest

from vcalp.cli import main
from vcalp.dimacs import write_dimacs
from vcalp.graph import complete_graph, cycle_graph, path_graph, petersen_graph


@pytest.fixture
def instances(tmp_path):
    paths = {}
    for name, g in [("c5", cycle_graph(5)), ("k5", complete_graph(5)), ("petersen", petersen_graph()), ("p3", path_graph(3))]:
        paths[name] = tmp_path / f"{name}.col"
        write_dimacs(g, paths[name])
    bad = tmp_path / "bad.col"
    bad.write_text("p edgy 3\n")
    paths["bad"] = bad
    return paths


def test_solve_exit_codes(instances, capsys):
    assert main(["solve", str(instances["petersen"]), "--mode", "vcalp", "--param", "1"]) == 0
    out = capsys.readouterr().out
    assert "YES" in out and "certificate  size 6" in out
    assert main(["solve", str(instances["petersen"]), "--mode", "vcalp", "--param", "0"]) == 1
    assert "NO" in capsys.readouterr().out
    assert main(["solve", str(instances["bad"]), "--param", "0"]) == 2
    assert main(["solve", str(instances["c5"]), "--param", "-1"]) == 2
    assert main(["solve", str(instances["c5"]), "--mode", "nope", "--param", "0"]) == 2
    assert main(["solve", str(instances["c5"])]) == 2


def test_solve_json(instances, capsys):
    assert main(["solve", str(instances["k5"]), "--mode", "agvc", "--param", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["answer"] is True
    assert data["initial_bounds"]["lp"] == "5/2" and data["initial_bounds"]["k"] == 4
    # certificates are reported 1-based, like the input file
    assert len(data["certificate"]) == 4 and set(data["certificate"]) <= set(range(1, 6))
    for key in ("nodes_visited", "max_depth", "reductions_applied", "branches_applied", "measure_checks"):
        assert key in data


@pytest.mark.parametrize(
    "name, expected",
    [("c5", ("2", "5/2", "3", "3")), ("petersen", ("5", "5", "5", "6")), ("k5", ("2", "5/2", "3", "4"))],
)
def test_bounds(instances, capsys, name, expected):
    assert main(["bounds", str(instances[name])]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()]
    assert tuple(r[1] for r in rows) == expected


def test_bounds_respects_cap(instances, capsys):
    assert main(["bounds", str(instances["petersen"]), "--cap", "5"]) == 0
    assert "skipped" in capsys.readouterr().out


def test_decompose(instances, capsys):
    assert main(["decompose", str(instances["p3"])]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[:3] == ["O  {1, 3}", "I  {2}", "P  {}"]


def test_reduce_c5(instances, capsys):
    assert main(["reduce", str(instances["c5"]), "3"]) == 0
    out = capsys.readouterr().out
    assert "Rule3(Z={1}" in out and "Rule2" in out
    assert "result   n=0 m=0 k'=0 k_hat'=0" in out


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.col", tmp_path / "b.col"
    assert main(["gen", "10", "0.4", "7", str(a)]) == 0
    assert main(["gen", "10", "0.4", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["gen", "10", "1.4", "7"]) == 2


def test_verify_small(capsys):
    assert main(["verify", "--exhaustive", "3", "--samples", "6", "--n-max", "9"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS named Petersen" in out


def test_bench(capsys):
    assert main(["bench", "--n", "12", "--count", "2", "--param", "1"]) == 0
    assert "max ratio" in capsys.readouterr().out
