"""The three reduction rules, their exhaustive application, and cover lifting.

Rule 1  replace G by G[V_half] of an extreme LP optimum x, k -= |V_1(x)|.
Rule 2  surplus-1 independent Z whose N(Z) has an edge: delete Z ∪ N(Z),
        k -= |N(Z)|.
Rule 3  surplus-1 independent Z with independent N(Z): delete Z, identify
        N(Z) into a fresh vertex z, k -= |Z|.

Every application checks at runtime that the measure k + MM - 2LP does not
increase, together with the per-rule MM and LP bounds behind that fact.
Which rule fires, and on which Z, never depends on k, so the graph-side
outcome of an exhaustive reduction is cached on the input graph.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import ContractViolation, InvariantViolation
from .graph import Graph
from .lpvc import (
    all_half_is_unique_optimum,
    extreme_half_region,
    graph_surplus_if_small,
    lp_optimum_extreme,
    lp_value2,
)
from .matching import matching_number


@dataclass(frozen=True)
class Budget:
    """Classical budget k together with MM and 2LP of the current graph."""

    k: int
    mm: int
    lp2: int

    @classmethod
    def of(cls, g: Graph, k: int) -> Budget:
        return cls(k, matching_number(g), lp_value2(g))

    @property
    def k_hat(self) -> int:
        """The measure k + MM - 2LP."""
        return self.k + self.mm - self.lp2

    @property
    def lower_bound(self) -> int:
        """2LP - MM."""
        return self.lp2 - self.mm


@dataclass(frozen=True)
class Rule1Step:
    ones: frozenset[int]
    zeros: frozenset[int]

    @property
    def cost(self) -> int:
        return len(self.ones)

    def lift(self, cover: frozenset[int]) -> frozenset[int]:
        return cover | self.ones


@dataclass(frozen=True)
class Rule2Step:
    Z: frozenset[int]
    NZ: frozenset[int]

    @property
    def cost(self) -> int:
        return len(self.NZ)

    def lift(self, cover: frozenset[int]) -> frozenset[int]:
        return cover | self.NZ


@dataclass(frozen=True)
class Rule3Step:
    Z: frozenset[int]
    NZ: frozenset[int]
    z: int

    @property
    def cost(self) -> int:
        return len(self.Z)

    def lift(self, cover: frozenset[int]) -> frozenset[int]:
        # z in the cover stands for all of N(Z); otherwise every outside
        # neighbour of N(Z) is covered already and Z takes the Z-N(Z) edges
        if self.z in cover:
            return (cover - {self.z}) | self.NZ
        return cover | self.Z


@dataclass(frozen=True)
class BranchPick:
    S: frozenset[int]

    @property
    def cost(self) -> int:
        return len(self.S)

    def lift(self, cover: frozenset[int]) -> frozenset[int]:
        return cover | self.S


Step = Union[Rule1Step, Rule2Step, Rule3Step, BranchPick]


@dataclass(frozen=True)
class ReductionTrace:
    """Steps leading from ``source`` to ``result``."""

    source: Graph
    result: Graph
    steps: tuple[Step, ...] = ()

    @property
    def cost(self) -> int:
        return sum(step.cost for step in self.steps)

    def then(self, step: Step, other: ReductionTrace) -> ReductionTrace:
        """This trace, one more step, then ``other`` (which must start where the step ends)."""
        return ReductionTrace(self.source, other.result, self.steps + (step,) + other.steps)


class RuleApplication(NamedTuple):
    graph: Graph
    budget: Budget
    step: Step


def _check_budget(g: Graph, b: Budget) -> None:
    if b.mm != matching_number(g) or b.lp2 != lp_value2(g):
        raise ContractViolation("budget snapshot does not match the graph")


def _check_safety(name: str, b: Budget, b2: Budget, mm_ok: bool, lp_ok: bool) -> None:
    if not mm_ok:
        raise InvariantViolation(f"{name}: matching number bound violated ({b.mm} -> {b2.mm})")
    if not lp_ok:
        raise InvariantViolation(f"{name}: LP bound violated (2LP {b.lp2} -> {b2.lp2})")
    if b2.k_hat > b.k_hat:
        raise InvariantViolation(f"{name}: measure increased ({b.k_hat} -> {b2.k_hat})")


def apply_rule1(g: Graph, b: Budget) -> RuleApplication | None:
    """Rule 1; None when all-1/2 is already the unique LP optimum."""
    _check_budget(g, b)
    if g.n == 0 or all_half_is_unique_optimum(g):
        return None
    x = lp_optimum_extreme(g)
    g2 = extreme_half_region(g)
    ones = x.ones
    b2 = Budget.of(g2, b.k - len(ones))
    _check_safety(
        "rule 1",
        b,
        b2,
        mm_ok=b2.mm <= b.mm - len(ones),
        lp_ok=b2.lp2 == b.lp2 - 2 * len(ones),
    )
    return RuleApplication(g2, b2, Rule1Step(ones, x.zeros))


def _surplus_one_witness(g: Graph):
    if not all_half_is_unique_optimum(g):
        raise ContractViolation("rule 1 still applies")
    _, witness = graph_surplus_if_small(g)
    return witness


def apply_rule2(g: Graph, b: Budget) -> RuleApplication | None:
    """Rule 2; requires that rule 1 does not apply."""
    _check_budget(g, b)
    w = _surplus_one_witness(g)
    if w is None or g.is_independent(w.neighborhood):
        return None
    g2 = g.delete_vertices(w.Z | w.neighborhood)
    b2 = Budget.of(g2, b.k - len(w.neighborhood))
    _check_safety(
        "rule 2",
        b,
        b2,
        mm_ok=b2.mm <= b.mm - len(w.Z),
        lp_ok=b2.lp2 >= b.lp2 - 2 * len(w.neighborhood) + 1,
    )
    return RuleApplication(g2, b2, Rule2Step(w.Z, w.neighborhood))


def apply_rule3(g: Graph, b: Budget) -> RuleApplication | None:
    """Rule 3 (struction); requires that rules 1 and 2 do not apply."""
    _check_budget(g, b)
    w = _surplus_one_witness(g)
    if w is None:
        return None
    if not g.is_independent(w.neighborhood):
        raise ContractViolation("rule 2 still applies")
    g2, z = g.delete_vertices(w.Z).identify_set(w.neighborhood)
    b2 = Budget.of(g2, b.k - len(w.Z))
    _check_safety(
        "rule 3",
        b,
        b2,
        mm_ok=b2.mm <= b.mm - len(w.Z),
        lp_ok=b2.lp2 >= b.lp2 - 2 * len(w.Z),
    )
    return RuleApplication(g2, b2, Rule3Step(w.Z, w.neighborhood, z))


RULES = (apply_rule1, apply_rule2, apply_rule3)


def _reduce_graph(g: Graph) -> tuple[Graph, tuple[Step, ...]]:
    steps: list[Step] = []
    current = g
    # the budget value is irrelevant to which rule fires; 0 keeps it simple
    budget = Budget.of(g, 0)
    while True:
        for rule in RULES:
            app = rule(current, budget)
            if app is not None:
                break
        else:
            return current, tuple(steps)
        if app.graph.n >= current.n:
            raise InvariantViolation("reduction step did not shrink the graph")
        steps.append(app.step)
        current = app.graph
        budget = Budget.of(current, app.budget.k)


def reduce_exhaustively(g: Graph, b: Budget) -> tuple[Graph, Budget, ReductionTrace]:
    """Apply the first applicable rule until none applies.

    The resulting graph is empty or has surplus at least two.  ``b.k`` may go
    negative along the way; the caller decides what that means.
    """
    _check_budget(g, b)
    reduced, steps = g.memo("reduction", lambda: _reduce_graph(g))
    trace = ReductionTrace(g, reduced, steps)
    b2 = Budget.of(reduced, b.k - trace.cost)
    if b2.k_hat > b.k_hat:
        raise InvariantViolation("exhaustive reduction increased the measure")
    return reduced, b2, trace


def lift_cover(trace: ReductionTrace, cover: Iterable[int]) -> frozenset[int]:
    """Turn a vertex cover of ``trace.result`` into one of ``trace.source``.

    The cover grows by exactly ``trace.cost`` vertices.
    """
    cover = frozenset(cover)
    if not cover <= trace.result.vertex_set() or not trace.result.is_vertex_cover(cover):
        raise ContractViolation("input is not a vertex cover of the reduced graph")
    lifted = cover
    for step in reversed(trace.steps):
        lifted = step.lift(lifted)
    if len(lifted) != len(cover) + trace.cost:
        raise InvariantViolation(f"lifted cover has size {len(lifted)}, expected {len(cover) + trace.cost}")
    if not lifted <= trace.source.vertex_set() or not trace.source.is_vertex_cover(lifted):
        raise InvariantViolation("lifted set does not cover the original graph")
    return lifted
