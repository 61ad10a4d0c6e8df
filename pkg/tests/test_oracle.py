from __future__ import annotations

from fractions import Fraction

import pytest

from vcalp.errors import OracleRefusal
from vcalp.graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from vcalp.oracle import (
    SplitMix64,
    brute_gallai_edmonds,
    brute_lp,
    brute_max_independent_set,
    brute_opt,
    brute_surplus,
    random_graph,
)


def test_brute_opt_examples():
    p = petersen_graph()
    assert brute_opt(p)[0] == 6 == p.n - brute_max_independent_set(p)
    assert brute_opt(complete_graph(5))[0] == 4
    assert brute_opt(Graph.from_edges(5, []))[0] == 0


def test_brute_lp_examples():
    assert brute_lp(cycle_graph(5)) == Fraction(5, 2)
    assert brute_lp(star_graph(3)) == 1
    assert brute_lp(Graph.from_edges(2, [(0, 1)])) == 1


def test_brute_surplus_examples():
    assert brute_surplus(cycle_graph(5))[0] == 1
    assert brute_surplus(complete_graph(4))[0] == 2
    assert brute_surplus(star_graph(3)) == (-2, frozenset({1, 2, 3}))


def test_brute_gallai_edmonds_examples():
    d = brute_gallai_edmonds(path_graph(3))
    assert (d.O, d.I, d.P) == ({0, 2}, {1}, frozenset())
    d = brute_gallai_edmonds(cycle_graph(4))
    assert not d.O and d.P == {0, 1, 2, 3}
    assert brute_gallai_edmonds(complete_graph(3)).O == {0, 1, 2}


def test_caps_refuse():
    with pytest.raises(OracleRefusal):
        brute_opt(cycle_graph(8), cap=6)
    with pytest.raises(OracleRefusal):
        brute_lp(cycle_graph(13))
    with pytest.raises(OracleRefusal):
        brute_surplus(Graph.empty())


def test_cap_env(monkeypatch):
    monkeypatch.setenv("VCALP_ORACLE_CAP", "4")
    with pytest.raises(OracleRefusal):
        brute_opt(cycle_graph(5))


def test_splitmix_reference_values():
    # first outputs for seed 0, as published with the reference implementation
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_random_graph():
    assert random_graph(5, 0.0, 3).m == 0
    assert random_graph(4, 1.0, 3) == complete_graph(4)
    assert random_graph(10, 0.4, 7) == random_graph(10, 0.4, 7)
    assert random_graph(10, 0.4, 7) != random_graph(10, 0.4, 8)
    with pytest.raises(ValueError):
        random_graph(3, 1.5, 0)
