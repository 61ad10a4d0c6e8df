from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from vcalp.errors import ContractViolation, InvalidVertexError
from vcalp.graph import Graph, complete_graph, cycle_graph, star_graph
from vcalp.lpvc import (
    AT_LEAST_TWO,
    HALF,
    all_half_is_unique_optimum,
    graph_surplus_if_small,
    lp_optimum,
    lp_optimum_extreme,
    lp_value,
    lp_value_forced_zero,
    min_surplus_witness_containing,
)
from vcalp.matching import maximum_matching
from vcalp.oracle import brute_lp, brute_surplus, brute_surplus_containing

from conftest import c5_chord, small_graphs, triangle_with_pendant


def test_lp_examples():
    assert brute_lp(cycle_graph(5)) == lp_value(cycle_graph(5)) == Fraction(5, 2)
    assert lp_optimum(cycle_graph(5)).is_all_half()
    star = lp_optimum(star_graph(3))
    assert brute_lp(star_graph(3)) == star.value == 1
    assert star.ones == {0} and star.zeros == {1, 2, 3}
    empty = lp_optimum(Graph.from_edges(4, []))
    assert empty.value == 0 and empty.zeros == {0, 1, 2, 3}


def test_extreme_triangle_with_pendant():
    g = triangle_with_pendant()
    # all-1/2 has value 2 = LP, so it is optimal but not extreme
    assert lp_value(g) == 2
    x = lp_optimum_extreme(g)
    assert x.zeros == {3, 2}
    assert x.ones == {0, 1}
    assert x.halves == frozenset() and x.value == 2


def test_extreme_c5_and_edgeless():
    assert lp_optimum_extreme(cycle_graph(5)).is_all_half()
    assert lp_optimum_extreme(Graph.from_edges(3, [])).zeros == {0, 1, 2}


def test_forced_zero_examples():
    c5 = cycle_graph(5)
    for v in c5.vertices():
        value, sol = lp_value_forced_zero(c5, v)
        assert value == 3 and sol[v] == 0 and sol.is_feasible_for(c5)
    assert lp_value_forced_zero(star_graph(3), 0)[0] == 3
    assert lp_value_forced_zero(Graph.from_edges(3, []), 1)[0] == 0
    with pytest.raises(InvalidVertexError):
        lp_value_forced_zero(c5, 11)


def test_witness_examples():
    w = min_surplus_witness_containing(cycle_graph(5), 0)
    assert 0 in w.Z and w.surplus == 1 == brute_surplus_containing(cycle_graph(5), 0)[0]
    w = min_surplus_witness_containing(complete_graph(4), 2)
    assert w.Z == {2} and w.surplus == 2
    w = min_surplus_witness_containing(c5_chord(), 0)
    assert w.Z == {0} and w.neighborhood == {1, 4} and w.surplus == 1


def test_witness_requires_unique_all_half():
    with pytest.raises(ContractViolation):
        min_surplus_witness_containing(star_graph(3), 0)
    with pytest.raises(ContractViolation):
        # all-1/2 optimal but not unique
        min_surplus_witness_containing(triangle_with_pendant(), 3)


def test_graph_surplus_classification():
    s, w = graph_surplus_if_small(cycle_graph(5))
    assert s == 1 and w.Z == {0}
    assert graph_surplus_if_small(complete_graph(4)) == (AT_LEAST_TWO, None)
    assert graph_surplus_if_small(complete_graph(5)) == (AT_LEAST_TWO, None)
    assert brute_surplus(complete_graph(5))[0] == 3


@settings(max_examples=200, deadline=None)
@given(small_graphs(9))
def test_lp_agrees_with_enumeration(g):
    x = lp_optimum(g)
    assert x.is_feasible_for(g) and x.value == brute_lp(g)
    e = lp_optimum_extreme(g)
    assert e.is_feasible_for(g) and e.value == x.value


@settings(max_examples=150, deadline=None)
@given(small_graphs(9))
def test_unique_all_half_iff_positive_surplus(g):
    if g.n == 0:
        return
    assert all_half_is_unique_optimum(g) == (brute_surplus(g)[0] > 0)


@settings(max_examples=150, deadline=None)
@given(small_graphs(9))
def test_extreme_half_region_has_positive_surplus(g):
    x = lp_optimum_extreme(g)
    if x.halves:
        assert brute_surplus(g.induced_subgraph(x.halves))[0] > 0
    # a maximum matching saturates every vertex valued 1
    assert x.ones <= maximum_matching(g).saturated


@settings(max_examples=150, deadline=None)
@given(small_graphs(9))
def test_deleting_vertices_from_surplus_graph(g):
    """With surplus >= s, deleting any s vertices lowers LP by exactly s/2."""
    if g.n == 0:
        return
    surplus = brute_surplus(g)[0]
    if surplus < 1:
        return
    lp = lp_value(g)
    vs = g.vertices()
    for s in range(1, min(surplus, g.n) + 1):
        assert lp_value(g.delete_vertices(vs[:s])) == lp - Fraction(s, 2)


@settings(max_examples=150, deadline=None)
@given(small_graphs(9))
def test_surplus_classification_agrees_with_brute_force(g):
    if g.n == 0 or not all_half_is_unique_optimum(g):
        return
    s, w = graph_surplus_if_small(g)
    true = brute_surplus(g)[0]
    if true == 1:
        assert s == 1 and len(w.neighborhood) - len(w.Z) == 1 and g.is_independent(w.Z)
    else:
        assert s == AT_LEAST_TWO
    for v in g.vertices():
        assert min_surplus_witness_containing(g, v).surplus == brute_surplus_containing(g, v)[0]
