"""Gallai-Edmonds decomposition V = O ⊎ I ⊎ P.

O holds the vertices left exposed by at least one maximum matching,
I = N(O) and P is the rest.  O is found with the direct test
MM(G - v) == MM(G), one blossom run per vertex that the reference maximum
matching saturates (vertices it exposes are in O by definition).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Edge, Graph
from .matching import has_perfect_matching, matching_number, maximum_matching


@dataclass(frozen=True)
class GallaiEdmonds:
    O: frozenset[int]
    I: frozenset[int]
    P: frozenset[int]
    O_components: tuple[frozenset[int], ...]

    def part_of(self, v: int) -> str:
        if v in self.O:
            return "O"
        if v in self.I:
            return "I"
        if v in self.P:
            return "P"
        raise KeyError(v)


def _decompose(g: Graph) -> GallaiEdmonds:
    mm = matching_number(g)
    saturated = maximum_matching(g).saturated
    outer = frozenset(
        v for v in g.vertices() if v not in saturated or matching_number(g.delete_vertices({v})) == mm
    )
    inner = g.neighborhood_of_set(outer)
    perfect = g.vertex_set() - outer - inner
    comps = tuple(g.induced_subgraph(outer).components())
    return GallaiEdmonds(outer, inner, perfect, comps)


def decompose(g: Graph) -> GallaiEdmonds:
    return g.memo("gallai_edmonds", lambda: _decompose(g))


def is_factor_critical(g: Graph) -> bool:
    """True iff g - v has a perfect matching for every vertex v."""
    return all(has_perfect_matching(g.delete_vertices({v})) for v in g.vertices())


def first_edge_within(g: Graph, part: frozenset[int]) -> Edge | None:
    """Lexicographically smallest edge with both endpoints in ``part``."""
    for u in sorted(part):
        for v in g.sorted_neighbors(u):
            if u < v and v in part:
                return (u, v)
    return None


def find_inner_edge(g: Graph, d: GallaiEdmonds) -> Edge | None:
    """Lexicographically smallest edge of G[I ∪ P], or None."""
    return first_edge_within(g, d.I | d.P)


def find_branch_vertex(g: Graph, d: GallaiEdmonds) -> tuple[int, int, int]:
    """Smallest u in O with two O-neighbours v < w (the two smallest such).

    Only meaningful when I ∪ P is independent; on a graph of surplus at least
    two such a triple is then guaranteed to exist.
    """
    if find_inner_edge(g, d) is not None:
        raise ContractViolation("G[I ∪ P] contains an edge; branch on it instead")
    for u in sorted(d.O):
        inside = [w for w in g.sorted_neighbors(u) if w in d.O]
        if len(inside) >= 2:
            return u, inside[0], inside[1]
    raise ContractViolation("no vertex of O has two neighbours in O")
