"""Immutable simple undirected graphs with stable integer vertex ids.

Every mutation primitive returns a new :class:`Graph`.  Vertex ids are never
reused inside one lineage: :meth:`Graph.identify_set` hands out ids from a
counter that is inherited by every graph derived from the original.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Any, Callable, TypeVar

from .errors import GraphError, InvalidVertexError

Edge = tuple[int, int]
T = TypeVar("T")


class Graph:
    """A simple undirected graph.

    Adjacency is kept as ``dict[int, frozenset[int]]``; every method that
    exposes an ordering (``vertices``, ``edges``, ``sorted_neighbors``) sorts by
    vertex id, so traversal order depends only on the vertex and edge sets.
    """

    __slots__ = ("_adj", "_next_id", "_memo", "_hash")

    def __init__(self, adj: dict[int, frozenset[int]], next_id: int | None = None):
        self._adj = adj
        if next_id is None:
            next_id = max(adj, default=-1) + 1
        self._next_id = next_id
        self._memo: dict[Any, Any] = {}
        self._hash: int | None = None

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, vertices: int | Iterable[int], edges: Iterable[Edge] = ()) -> Graph:
        """Build a graph from a vertex count (ids ``0..n-1``) or id iterable.

        Duplicate edges collapse.  Self-loops and edges touching unknown
        vertices raise :class:`GraphError`.
        """
        if isinstance(vertices, int):
            if vertices < 0:
                raise GraphError("vertex count must be non-negative")
            vertex_ids: Iterable[int] = range(vertices)
        else:
            vertex_ids = vertices
        adj: dict[int, set[int]] = {}
        for v in vertex_ids:
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        return cls({v: frozenset(nbrs) for v, nbrs in adj.items()})

    @classmethod
    def empty(cls) -> Graph:
        return cls({})

    # basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def next_id(self) -> int:
        """Smallest id that a fresh vertex in this lineage may receive."""
        return self._next_id

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in sorted(self._adj) for v in sorted(self._adj[u]) if u < v]

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __len__(self) -> int:
        return len(self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InvalidVertexError(f"vertex {v} is not in the graph") from None

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self.neighbors(v))

    def _check_subset(self, xs: Iterable[int]) -> frozenset[int]:
        xs = frozenset(xs)
        missing = xs - self._adj.keys()
        if missing:
            raise InvalidVertexError(f"vertices {sorted(missing)} are not in the graph")
        return xs

    def neighborhood_of_set(self, xs: Iterable[int]) -> frozenset[int]:
        """N(X): vertices outside X adjacent to some member of X."""
        xs = self._check_subset(xs)
        out: set[int] = set()
        for v in xs:
            out |= self._adj[v]
        return frozenset(out - xs)

    def is_independent(self, xs: Iterable[int]) -> bool:
        xs = self._check_subset(xs)
        return all(not (self._adj[v] & xs) for v in xs)

    def is_vertex_cover(self, cover: Iterable[int]) -> bool:
        """True iff every edge has an endpoint in ``cover``.

        Ids in ``cover`` that are not vertices are ignored.
        """
        cover = frozenset(cover)
        return all(u in cover or v in cover for u, v in self.edges())

    # derived graphs ---------------------------------------------------

    def induced_subgraph(self, xs: Iterable[int]) -> Graph:
        xs = self._check_subset(xs)
        return Graph({v: self._adj[v] & xs for v in xs}, self._next_id)

    def delete_vertices(self, xs: Iterable[int]) -> Graph:
        xs = self._check_subset(xs)
        if not xs:
            return self
        return Graph({v: nbrs - xs for v, nbrs in self._adj.items() if v not in xs}, self._next_id)

    def identify_set(self, s: Iterable[int]) -> tuple[Graph, int]:
        """Replace the vertices of ``s`` by one fresh vertex adjacent to N(s)."""
        s = self._check_subset(s)
        if not s:
            raise GraphError("cannot identify an empty vertex set")
        z = self._next_id
        outside = self.neighborhood_of_set(s)
        adj = {v: nbrs - s for v, nbrs in self._adj.items() if v not in s}
        for v in outside:
            adj[v] = adj[v] | {z}
        adj[z] = outside
        return Graph(adj, z + 1), z

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by their smallest vertex."""
        seen: set[int] = set()
        comps = []
        for root in self.vertices():
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    # value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def memo(self, key: Any, compute: Callable[[], T]) -> T:
        """Cache a derived quantity on this (immutable) graph."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value


# named families used by tests, the CLI and the documentation


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices relabelled consecutively from 0."""
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        index = {v: offset + i for i, v in enumerate(g.vertices())}
        edges.extend((index[u], index[v]) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)
