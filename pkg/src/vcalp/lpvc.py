"""Half-integral optima of the relaxed vertex cover LP, and surplus queries.

All values are kept doubled: an assignment maps each vertex to 0, 1 or 2
(meaning 0, 1/2, 1) and ``value2`` is twice the objective.  Nothing here ever
touches floating point.

LP(G) is computed on the bipartite double cover B of G (copies v_L, v_R and
edges u_L-v_R, v_L-u_R for every edge uv).  A minimum vertex cover C of B,
obtained by König's construction, gives x_v = |{v_L, v_R} ∩ C| / 2 and
LP(G) = |C| / 2.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContractViolation, InvariantViolation
from .graph import Graph
from .matching import bipartite_matching_indexed, konig_cover_indexed

ZERO, HALF, ONE = 0, 1, 2
AT_LEAST_TWO = "at least 2"


@dataclass(frozen=True)
class HalfIntegralSolution:
    """A feasible {0, 1/2, 1} assignment, stored doubled."""

    x2: Mapping[int, int]
    value2: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value2", sum(self.x2.values()))

    @property
    def value(self) -> Fraction:
        return Fraction(self.value2, 2)

    def _part(self, level: int) -> frozenset[int]:
        return frozenset(v for v, x in self.x2.items() if x == level)

    @property
    def zeros(self) -> frozenset[int]:
        return self._part(ZERO)

    @property
    def halves(self) -> frozenset[int]:
        return self._part(HALF)

    @property
    def ones(self) -> frozenset[int]:
        return self._part(ONE)

    def __getitem__(self, v: int) -> Fraction:
        return Fraction(self.x2[v], 2)

    def is_feasible_for(self, g: Graph) -> bool:
        if set(self.x2) != g.vertex_set():
            return False
        return all(self.x2[u] + self.x2[v] >= 2 for u, v in g.edges())

    def is_all_half(self) -> bool:
        return all(x == HALF for x in self.x2.values())


@dataclass(frozen=True)
class SurplusWitness:
    """An independent set Z with its neighbourhood and |N(Z)| - |Z|."""

    Z: frozenset[int]
    neighborhood: frozenset[int]
    surplus: int


def _double_cover_solution(g: Graph) -> HalfIntegralSolution:
    order = g.vertices()
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[w] for w in g.sorted_neighbors(v)] for v in order]
    n = len(order)
    mate_left, mate_right = bipartite_matching_indexed(n, n, adj)
    in_left, in_right = konig_cover_indexed(adj, mate_left, mate_right)
    return HalfIntegralSolution({v: int(in_left[i]) + int(in_right[i]) for i, v in enumerate(order)})


def lp_optimum(g: Graph) -> HalfIntegralSolution:
    """An optimal half-integral solution of LPVC(g)."""
    return g.memo("lp_optimum", lambda: _double_cover_solution(g))


def lp_value2(g: Graph) -> int:
    """2 * LP(g) as an integer."""
    return lp_optimum(g).value2


def lp_value(g: Graph) -> Fraction:
    return lp_optimum(g).value


def _forced_zero(g: Graph, v: int) -> HalfIntegralSolution:
    nbrs = g.neighbors(v)
    rest = lp_optimum(g.delete_vertices(nbrs | {v}))
    x2 = dict(rest.x2)
    x2[v] = ZERO
    for u in nbrs:
        x2[u] = ONE
    return HalfIntegralSolution(x2)


def lp_value_forced_zero(g: Graph, v: int) -> tuple[Fraction, HalfIntegralSolution]:
    """Minimum of LPVC(g) subject to x_v = 0, with a witnessing solution.

    With v at 0 every neighbour is forced to 1, and the remainder is an
    unconstrained LP on g - N[v].
    """
    sol = g.memo(("forced_zero", v), lambda: _forced_zero(g, v))
    return sol.value, sol


def _witness_from_forced(g: Graph, v: int) -> SurplusWitness:
    _, sol = lp_value_forced_zero(g, v)
    z = sol.zeros
    nz = g.neighborhood_of_set(z)
    surplus = len(nz) - len(z)
    if nz != sol.ones or sol.value2 - g.n != surplus:
        raise InvariantViolation(f"forced-zero witness for vertex {v} is inconsistent")
    return SurplusWitness(z, nz, surplus)


def _require_all_half_optimal(g: Graph) -> None:
    if lp_value2(g) != g.n:
        raise ContractViolation("all-1/2 is not an optimal solution of LPVC(g)")


def min_surplus_witness_containing(g: Graph, v: int) -> SurplusWitness:
    """Independent set of minimum surplus among those containing ``v``.

    Requires all-1/2 to be the unique LP optimum of ``g``.  Under that
    precondition every independent Z containing v yields a forced-zero
    solution of value LP + surplus(Z)/2, so the forced-zero optimum's zero
    set is a minimiser.
    """
    g.neighbors(v)
    _require_all_half_optimal(g)
    w = g.memo(("surplus_witness", v), lambda: _witness_from_forced(g, v))
    if w.surplus <= 0:
        raise ContractViolation(f"all-1/2 is not the unique LP optimum (surplus {w.surplus} at vertex {v})")
    return w


def graph_surplus_if_small(g: Graph) -> tuple[int | str, SurplusWitness | None]:
    """Classify surplus(g) as exactly 1 (with a witness) or ``AT_LEAST_TWO``.

    Vertices are scanned in ascending id; the first surplus-1 witness wins.
    """
    for v in g.vertices():
        w = min_surplus_witness_containing(g, v)
        if w.surplus == 1:
            return 1, w
    return AT_LEAST_TWO, None


def _extreme(g: Graph) -> tuple[HalfIntegralSolution, Graph]:
    x2 = dict(lp_optimum(g).x2)
    half = g.induced_subgraph(v for v, x in x2.items() if x == HALF)
    # all-1/2 is optimal (not necessarily unique) on the half-region of any
    # optimum; peel off surplus-0 sets until it becomes unique
    changed = True
    while changed:
        changed = False
        for v in half.vertices():
            _, sol = lp_value_forced_zero(half, v)
            if sol.value2 > half.n:
                continue
            z = sol.zeros
            nz = half.neighborhood_of_set(z)
            if len(nz) != len(z):
                raise InvariantViolation("half-region of an LP optimum has negative surplus")
            for u in z:
                x2[u] = ZERO
            for u in nz:
                x2[u] = ONE
            half = half.delete_vertices(z | nz)
            changed = True
            break
    sol = HalfIntegralSolution(x2)
    if sol.value2 != lp_value2(g):
        raise InvariantViolation("extreme LP solution lost optimality")
    half.memo("all_half_unique", lambda: True)
    return sol, half


def lp_optimum_extreme(g: Graph) -> HalfIntegralSolution:
    """Optimal solution x with all-1/2 the unique optimum of LPVC(g[V_half(x)])."""
    return g.memo("lp_optimum_extreme", lambda: _extreme(g))[0]


def extreme_half_region(g: Graph) -> Graph:
    """g[V_half] for the extreme optimum; all-1/2 is its unique LP optimum."""
    return g.memo("lp_optimum_extreme", lambda: _extreme(g))[1]


def all_half_is_unique_optimum(g: Graph) -> bool:
    """True iff all-1/2 is the unique optimum of LPVC(g), i.e. surplus(g) > 0."""
    return g.memo("all_half_unique", lambda: lp_optimum_extreme(g).halves == g.vertex_set())
