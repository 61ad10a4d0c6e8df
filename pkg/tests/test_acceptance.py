"""Acceptance gate: one PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -s``; the summary
lines are printed even without ``-s``.
"""

from __future__ import annotations

import time

import networkx as nx
import pytest

from vcalp.graph import Graph, complete_graph, cycle_graph, petersen_graph
from vcalp.lpvc import lp_value2
from vcalp.matching import matching_number
from vcalp.oracle import brute_opt
from vcalp.solver import solve_vcalp
from vcalp.verify import Summary, labeled_graphs, random_corpus, summarize, sweep

pytestmark = pytest.mark.slow

RANDOM_COUNT = 5000
RANDOM_SEED = 20240601


def _atlas() -> list[tuple[str, Graph]]:
    items = []
    for i, h in enumerate(nx.graph_atlas_g()):
        index = {v: j for j, v in enumerate(sorted(h.nodes))}
        edges = [(index[u], index[v]) for u, v in h.edges]
        items.append((f"atlas#{i}", Graph.from_edges(len(index), edges)))
    return items


def _report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture(scope="module")
def exhaustive() -> tuple[Summary, float]:
    start = time.perf_counter()
    items = _atlas()
    for n in range(7):
        items.extend(labeled_graphs(n))
    return summarize(sweep(items)), time.perf_counter() - start


@pytest.fixture(scope="module")
def randomized() -> tuple[Summary, float]:
    start = time.perf_counter()
    summary = summarize(sweep(random_corpus(RANDOM_COUNT, RANDOM_SEED)))
    return summary, time.perf_counter() - start


@pytest.fixture(scope="module")
def corpus(exhaustive, randomized) -> list[Summary]:
    return [exhaustive[0], randomized[0]]


def _failures(corpus: list[Summary], check: str) -> list[str]:
    return [msg for s in corpus for msg in s.failures.get(check, [])]


def test_01_exhaustive_oracle_equivalence(exhaustive, capsys):
    s, secs = exhaustive
    bad = s.failures["decision"]
    _report(capsys, 1, not bad, f"{s.instances} graphs (isomorphism classes n<=7, labeled n<=6), "
            f"{s.solves} solves, {len(bad)} disagreements, {secs:.0f}s")
    assert not bad, bad[:5]


def test_02_random_oracle_equivalence(randomized, capsys):
    s, secs = randomized
    bad = s.failures["decision"]
    ok = not bad and s.instances >= 5000
    _report(capsys, 2, ok, f"{s.instances} G(n,p) graphs n in [8,12], p in {{0.2,0.4,0.6}}, "
            f"{s.solves} solves, {len(bad)} disagreements, {secs:.0f}s")
    assert ok, bad[:5]


def test_03_lower_bound_chain(corpus, capsys):
    bad = _failures(corpus, "chain")
    _report(capsys, 3, not bad, f"MM <= LP <= 2LP-MM <= OPT, {len(bad)} violations")
    assert not bad, bad[:5]


def test_04_reduction_safety(corpus, capsys):
    bad = _failures(corpus, "reduction_safety")
    steps = sum(s.reduction_steps for s in corpus)
    replayed = sum(s.replayed_steps for s in corpus)
    _report(capsys, 4, not bad, f"{steps} rule applications checked ({replayed} replayed against oracles), "
            f"{len(bad)} violations")
    assert not bad, bad[:5]


def test_05_reduced_graph_surplus(corpus, capsys):
    bad = _failures(corpus, "reduced_surplus")
    checked = sum(s.reduced_graphs_checked for s in corpus)
    ok = not bad and checked > 0
    _report(capsys, 5, ok, f"{checked} distinct reduced graphs have surplus >= 2, {len(bad)} violations")
    assert ok, bad[:5]


def test_06_measure_drop(corpus, capsys):
    bad = _failures(corpus, "measure_drop")
    nodes = sum(s.branch_nodes for s in corpus)
    _report(capsys, 6, not bad, f"{nodes} branch nodes, child measure and depth, {len(bad)} violations")
    assert not bad, bad[:5]


def test_07_node_bound(corpus, capsys):
    bad = _failures(corpus, "node_bound")
    ratio = max(s.max_ratio for s in corpus)
    _report(capsys, 7, not bad, f"nodes <= 3^(k_hat+1)(n+1) everywhere, max nodes/3^k_hat = {ratio:.3f}")
    assert not bad, bad[:5]


def test_08_gallai_edmonds(corpus, capsys):
    bad = _failures(corpus, "gallai_edmonds")
    _report(capsys, 8, not bad, f"decomposition, factor-critical O-components, perfect G[P] on n<=8, "
            f"{len(bad)} violations")
    assert not bad, bad[:5]


def test_09_named_instances(capsys):
    lines = []
    ok = True
    for name, g, expected_bound, expected_opt, no, yes in [
        ("K5", complete_graph(5), 3, 4, 0, 1),
        ("Petersen", petersen_graph(), 5, 6, 0, 1),
        ("C5", cycle_graph(5), 3, 3, None, 0),
    ]:
        bound, opt = lp_value2(g) - matching_number(g), brute_opt(g)[0]
        got_yes = solve_vcalp(g, yes)
        good = (bound, opt) == (expected_bound, expected_opt) and got_yes.answer
        good &= g.is_vertex_cover(got_yes.certificate) and len(got_yes.certificate) == opt
        if no is not None:
            good &= not solve_vcalp(g, no).answer
        ok &= good
        lines.append(f"{name} bound={bound} OPT={opt}")
    _report(capsys, 9, ok, "; ".join(lines))
    assert ok


def test_10_certificates(corpus, capsys):
    bad = _failures(corpus, "certificate")
    yes = sum(s.yes_answers for s in corpus)
    _report(capsys, 10, not bad, f"{yes} YES answers, each with a verified cover of size <= k, {len(bad)} bad")
    assert not bad, bad[:5]
