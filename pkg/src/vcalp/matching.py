"""Maximum cardinality matching.

General graphs use Edmonds' blossom algorithm (BFS with blossom contraction
through a ``base`` array, O(V^3)).  Bipartite graphs use a plain
augmenting-path search because the LP module needs the König vertex cover
that falls out of the final alternating-reachability pass.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Edge, Graph


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: frozenset[Edge]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Matching:
        return cls(frozenset((min(u, v), max(u, v)) for u, v in pairs))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def exposed(self, g: Graph) -> frozenset[int]:
        return g.vertex_set() - self.saturated

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_valid_in(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


# general graphs -------------------------------------------------------------


def _blossom_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximum matching on vertices ``0..n-1``; returns the mate array (-1 = exposed)."""
    match = [-1] * n
    # greedy warm start; the augmenting phase still guarantees maximality
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    for root in range(n):
        if match[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])
        end = -1

        def lca(a: int, b: int) -> int:
            marked = [False] * n
            while True:
                a = base[a]
                marked[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if marked[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue and end == -1:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])

        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return match


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``; deterministic for a given vertex/edge set."""

    def compute() -> Matching:
        order = g.vertices()
        index = {v: i for i, v in enumerate(order)}
        adj = [[index[w] for w in g.sorted_neighbors(v)] for v in order]
        mate = _blossom_matching(len(order), adj)
        return Matching.from_pairs((order[i], order[j]) for i, j in enumerate(mate) if i < j)

    return g.memo("maximum_matching", compute)


def matching_number(g: Graph) -> int:
    """MM(g)."""
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return 2 * matching_number(g) == g.n


# bipartite graphs -----------------------------------------------------------


def bipartite_matching_indexed(n_left: int, n_right: int, adj: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Maximum matching of a bipartite graph given as left-indexed adjacency.

    ``adj[i]`` lists the right-side neighbours of left vertex ``i``.  Returns
    ``(mate_left, mate_right)`` with -1 marking exposed vertices.  Augmenting
    paths are searched from left vertices in ascending index order.
    """
    mate_left = [-1] * n_left
    mate_right = [-1] * n_right
    for i in range(n_left):
        for j in adj[i]:
            if mate_right[j] == -1:
                mate_left[i], mate_right[j] = j, i
                break

    for start in range(n_left):
        if mate_left[start] != -1:
            continue
        # iterative DFS for an augmenting path
        seen = [False] * n_right
        stack = [(start, iter(adj[start]))]
        via: dict[int, int] = {}
        found = -1
        while stack and found == -1:
            i, it = stack[-1]
            for j in it:
                if seen[j]:
                    continue
                seen[j] = True
                via[j] = i
                if mate_right[j] == -1:
                    found = j
                else:
                    nxt = mate_right[j]
                    stack.append((nxt, iter(adj[nxt])))
                break
            else:
                stack.pop()
        j = found
        while j != -1:
            i = via[j]
            prev = mate_left[i]
            mate_left[i], mate_right[j] = j, i
            j = prev
    return mate_left, mate_right


def konig_cover_indexed(
    adj: Sequence[Sequence[int]], mate_left: Sequence[int], mate_right: Sequence[int]
) -> tuple[list[bool], list[bool]]:
    """König's construction: minimum vertex cover from a maximum matching.

    Let Z be everything reachable from exposed left vertices by alternating
    paths.  The cover is (L \\ Z) ∪ (R ∩ Z).  Returned as two membership masks.
    """
    n_left, n_right = len(mate_left), len(mate_right)
    reach_left = [False] * n_left
    reach_right = [False] * n_right
    queue = deque(i for i in range(n_left) if mate_left[i] == -1)
    for i in queue:
        reach_left[i] = True
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if reach_right[j]:
                continue
            reach_right[j] = True
            k = mate_right[j]
            if k != -1 and not reach_left[k]:
                reach_left[k] = True
                queue.append(k)
    return [not r for r in reach_left], reach_right


def _bipartite_index(
    g: Graph, left: Iterable[int], right: Iterable[int]
) -> tuple[list[int], list[int], list[list[int]]]:
    left_s, right_s = frozenset(left), frozenset(right)
    if left_s & right_s or (left_s | right_s) != g.vertex_set():
        raise ContractViolation("left/right must partition the vertex set")
    lorder, rorder = sorted(left_s), sorted(right_s)
    rindex = {v: j for j, v in enumerate(rorder)}
    adj = []
    for u in lorder:
        row = []
        for w in g.sorted_neighbors(u):
            if w in left_s:
                raise ContractViolation(f"edge ({u}, {w}) lies inside the left side")
            row.append(rindex[w])
        adj.append(row)
    for u in rorder:
        if g.neighbors(u) & right_s:
            raise ContractViolation(f"vertex {u} has a neighbour inside the right side")
    return lorder, rorder, adj


def bipartite_maximum_matching(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    """Maximum matching of a bipartite graph with the given bipartition."""
    lorder, rorder, adj = _bipartite_index(g, left, right)
    mate_left, _ = bipartite_matching_indexed(len(lorder), len(rorder), adj)
    return Matching.from_pairs((lorder[i], rorder[j]) for i, j in enumerate(mate_left) if j != -1)


def konig_vertex_cover(g: Graph, left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    """Minimum vertex cover of a bipartite graph; its size equals the matching number."""
    lorder, rorder, adj = _bipartite_index(g, left, right)
    mate_left, mate_right = bipartite_matching_indexed(len(lorder), len(rorder), adj)
    in_left, in_right = konig_cover_indexed(adj, mate_left, mate_right)
    return frozenset([v for v, c in zip(lorder, in_left) if c] + [v for v, c in zip(rorder, in_right) if c])
