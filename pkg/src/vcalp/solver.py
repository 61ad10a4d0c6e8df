"""Branch-and-reduce search for vertex cover above the bound 2LP - MM.

Every search node reduces exhaustively, stops on k_hat < 0 (no cover of size
k exists, since OPT >= 2LP - MM) or on the empty graph, and otherwise
branches on the Gallai-Edmonds decomposition of the reduced graph:

* an edge uv inside G[I ∪ P]: children G - u and G - v, budget k - 1;
* otherwise u ∈ O with O-neighbours v, w, and an edge xy inside G'[P'] for
  G' = G - u: children G - {v, w}, G' - x and G' - y, budget k - 2.

Each child's measure must be at least one below its parent's, so the tree
has depth at most k_hat and at most 3^k_hat leaves.  Children whose measure
is already negative are answered NO without a recursive call.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .errors import ContractViolation, InvariantViolation
from .gallai_edmonds import decompose, find_branch_vertex, find_inner_edge, first_edge_within
from .graph import Edge, Graph
from .lpvc import lp_value2
from .matching import matching_number
from .reductions import (
    BranchPick,
    Budget,
    Rule1Step,
    Rule2Step,
    Rule3Step,
    ReductionTrace,
    lift_cover,
    reduce_exhaustively,
)


class Mode(str, enum.Enum):
    """How the user-supplied parameter turns into the classical budget k."""

    VC = "vc"  # k itself
    AGVC = "agvc"  # k = MM + k_mu
    VCAL = "vcal"  # k = ceil(LP) + k_lambda
    VCALP = "vcalp"  # k = (2LP - MM) + k_hat


class Bounds(NamedTuple):
    mm: int
    lp2: int
    lower_bound: int
    k: int
    k_hat: int


@dataclass
class SolveReport:
    answer: bool
    certificate: frozenset[int] | None
    nodes_visited: int
    max_depth: int
    reductions_applied: dict[str, int]
    branches_applied: dict[str, int]
    initial_bounds: Bounds
    measure_checks: int = 0
    n: int = 0

    @property
    def node_bound(self) -> int:
        """3^(k_hat + 1) * (n + 1), the allowance on nodes_visited."""
        return 3 ** (max(self.initial_bounds.k_hat, 0) + 1) * (self.n + 1)

    @property
    def node_ratio(self) -> float:
        """nodes_visited / 3^k_hat."""
        return self.nodes_visited / 3 ** max(self.initial_bounds.k_hat, 0)

    def to_dict(self) -> dict:
        b = self.initial_bounds
        return {
            "answer": self.answer,
            "certificate": sorted(self.certificate) if self.certificate is not None else None,
            "nodes_visited": self.nodes_visited,
            "max_depth": self.max_depth,
            "reductions_applied": dict(self.reductions_applied),
            "branches_applied": dict(self.branches_applied),
            "measure_checks": self.measure_checks,
            "initial_bounds": {
                "mm": b.mm,
                "lp": format_doubled(b.lp2),
                "lp_decimal": b.lp2 / 2,
                "lovasz_plummer": b.lower_bound,
                "k": b.k,
                "k_hat": b.k_hat,
            },
        }


def format_doubled(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


class Child(NamedTuple):
    graph: Graph
    budget: Budget
    picked: frozenset[int]


def lovasz_plummer_bound(g: Graph) -> int:
    """2LP(g) - MM(g), a lower bound on the vertex cover number."""
    return lp_value2(g) - matching_number(g)


def _check_drop(parent: Budget, child: Budget, what: str) -> None:
    if child.k_hat > parent.k_hat - 1:
        raise InvariantViolation(f"{what}: measure went from {parent.k_hat} to {child.k_hat}")


def branch_rule_1(g: Graph, b: Budget, e: Edge) -> list[Child]:
    """Branch on the endpoints of an edge of G[I ∪ P]."""
    u, v = e
    if not g.has_edge(u, v):
        raise ContractViolation(f"{e} is not an edge")
    d = decompose(g)
    inner = d.I | d.P
    if u not in inner or v not in inner:
        raise ContractViolation(f"{e} does not lie inside G[I ∪ P]")
    children = []
    for x in (u, v):
        g1 = g.delete_vertices({x})
        b1 = Budget.of(g1, b.k - 1)
        if b1.mm != b.mm - 1:
            raise InvariantViolation(f"deleting {x} from I ∪ P changed MM by {b.mm - b1.mm}")
        if b1.lp2 != b.lp2 - 1:
            raise InvariantViolation(f"deleting {x} from a surplus-2 graph changed 2LP by {b.lp2 - b1.lp2}")
        _check_drop(b, b1, "branching rule 1")
        children.append(Child(g1, b1, frozenset({x})))
    return children


def branch_rule_2(g: Graph, b: Budget) -> list[Child]:
    """Three-way branch on u ∈ O and two of its O-neighbours."""
    d = decompose(g)
    u, v, w = find_branch_vertex(g, d)
    g_vw = g.delete_vertices({v, w})
    b1 = Budget.of(g_vw, b.k - 2)
    if b1.mm > b.mm - 1:
        raise InvariantViolation(f"deleting O-neighbours {v}, {w} of {u} did not lower MM")
    _check_drop(b, b1, "branching rule 2, branch 1")
    children = [Child(g_vw, b1, frozenset({v, w}))]

    g_u = g.delete_vertices({u})
    if matching_number(g_u) != b.mm:
        raise InvariantViolation(f"deleting {u} ∈ O changed MM")
    xy = first_edge_within(g_u, decompose(g_u).P)
    if xy is None:
        raise InvariantViolation(f"G - {u} has no edge inside its P part")
    for x in xy:
        g2 = g_u.delete_vertices({x})
        b2 = Budget.of(g2, b.k - 2)
        _check_drop(b, b2, "branching rule 2")
        children.append(Child(g2, b2, frozenset({u, x})))
    return children


_STEP_NAMES = {Rule1Step: "rule1", Rule2Step: "rule2", Rule3Step: "rule3"}


@dataclass
class _Search:
    on_reduced: Callable[[Graph], None] | None = None
    nodes: int = 0
    max_depth: int = 0
    checks: int = 0
    reductions: Counter = field(default_factory=Counter)
    branches: Counter = field(default_factory=Counter)

    def run(self, g: Graph, b: Budget, depth: int) -> ReductionTrace | None:
        """Trace from ``g`` to an empty graph if a cover of size b.k exists."""
        self.nodes += 1
        self.max_depth = max(self.max_depth, depth)
        reduced, rb, trace = reduce_exhaustively(g, b)
        for step in trace.steps:
            self.reductions[_STEP_NAMES[type(step)]] += 1
        if self.on_reduced is not None:
            self.on_reduced(reduced)
        if rb.k_hat < 0:
            return None
        if reduced.n == 0:
            return trace

        d = decompose(reduced)
        e = find_inner_edge(reduced, d)
        if e is not None:
            self.branches["rule1"] += 1
            children = branch_rule_1(reduced, rb, e)
        else:
            self.branches["rule2"] += 1
            children = branch_rule_2(reduced, rb)
        self.checks += len(children)

        for child in children:
            if child.budget.k_hat < 0:
                continue
            sub = self.run(child.graph, child.budget, depth + 1)
            if sub is not None:
                return trace.then(BranchPick(child.picked), sub)
        return None


def _budget_for(g: Graph, mode: Mode, param: int) -> int:
    mode = Mode(mode)
    if mode is Mode.VC:
        return param
    if mode is Mode.AGVC:
        return matching_number(g) + param
    if mode is Mode.VCAL:
        return (lp_value2(g) + 1) // 2 + param
    return lovasz_plummer_bound(g) + param


def solve_mode(
    g: Graph,
    mode: Mode | str,
    param: int,
    on_reduced: Callable[[Graph], None] | None = None,
) -> SolveReport:
    """Decide whether g has a vertex cover within the budget implied by ``mode``."""
    k = _budget_for(g, Mode(mode), param)
    b = Budget.of(g, k)
    bounds = Bounds(b.mm, b.lp2, b.lower_bound, k, b.k_hat)
    search = _Search(on_reduced)
    found = None
    if b.k_hat >= 0:
        found = search.run(g, b, 0)
    certificate = None
    if found is not None:
        certificate = lift_cover(found, frozenset())
        if len(certificate) > k:
            raise InvariantViolation(f"certificate of size {len(certificate)} exceeds budget {k}")
    report = SolveReport(
        answer=found is not None,
        certificate=certificate,
        nodes_visited=search.nodes,
        max_depth=search.max_depth,
        reductions_applied={name: search.reductions[name] for name in ("rule1", "rule2", "rule3")},
        branches_applied={name: search.branches[name] for name in ("rule1", "rule2")},
        initial_bounds=bounds,
        measure_checks=search.checks,
        n=g.n,
    )
    if b.k_hat >= 0 and search.max_depth > b.k_hat:
        raise InvariantViolation(f"recursion depth {search.max_depth} exceeds initial measure {b.k_hat}")
    if report.nodes_visited > report.node_bound:
        raise InvariantViolation(f"{report.nodes_visited} nodes exceed 3^(k_hat+1)(n+1) = {report.node_bound}")
    return report


def solve_vcalp(g: Graph, k_hat: int, on_reduced: Callable[[Graph], None] | None = None) -> SolveReport:
    """Is OPT(g) <= (2LP(g) - MM(g)) + k_hat?"""
    return solve_mode(g, Mode.VCALP, k_hat, on_reduced)


def minimum_vertex_cover(g: Graph) -> frozenset[int]:
    """A minimum vertex cover, found by raising k_hat from 0 until YES."""
    k_hat = 0
    while True:
        report = solve_vcalp(g, k_hat)
        if report.answer:
            assert report.certificate is not None
            return report.certificate
        k_hat += 1
