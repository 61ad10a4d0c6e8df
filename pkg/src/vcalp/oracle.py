"""Brute-force reference implementations, deliberately naive.

None of these share code with the solver path beyond the Graph type.  Each
refuses graphs above its size cap instead of silently taking forever.
"""

from __future__ import annotations

import functools
import itertools
import os
from fractions import Fraction

import numpy as np

from .errors import OracleRefusal
from .gallai_edmonds import GallaiEdmonds
from .graph import Edge, Graph

DEFAULT_OPT_CAP = 20
CAP_ENV = "VCALP_ORACLE_CAP"


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_OPT_CAP))


def _refuse_above(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise OracleRefusal(f"{what} refuses graphs with more than {cap} vertices (got {g.n})")


def brute_opt(g: Graph, cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover by enumerating subsets in order of size.

    Isolated vertices are skipped since no minimum cover needs them.
    """
    cap = default_cap() if cap is None else cap
    _refuse_above(g, cap, "brute_opt")
    edges = g.edges()
    candidates = [v for v in g.vertices() if g.degree(v) > 0]
    for size in range(len(candidates) + 1):
        for subset in itertools.combinations(candidates, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return size, frozenset(chosen)
    raise AssertionError("unreachable: the full candidate set is a cover")


def brute_max_independent_set(g: Graph, cap: int = 20) -> int:
    """Size of a maximum independent set, by bitmask enumeration."""
    _refuse_above(g, cap, "brute_max_independent_set")
    order = g.vertices()
    index = {v: i for i, v in enumerate(order)}
    nbr = [sum(1 << index[w] for w in g.neighbors(v)) for v in order]

    best = 0

    def extend(i: int, chosen: int, size: int) -> None:
        nonlocal best
        if size + (len(order) - i) <= best:
            return
        if i == len(order):
            best = size
            return
        if not nbr[i] & chosen:
            extend(i + 1, chosen | (1 << i), size + 1)
        extend(i + 1, chosen, size)

    extend(0, 0, 0)
    return best


@functools.lru_cache(maxsize=None)
def _ternary_grid(n: int) -> np.ndarray:
    """All 3^n doubled assignments, one row each (column i = base-3 digit i)."""
    codes = np.arange(3**n, dtype=np.int64)
    return np.stack([(codes // 3**i) % 3 for i in range(n)], axis=1).astype(np.int8)


def brute_lp(g: Graph, cap: int = 12) -> Fraction:
    """Minimum of LPVC(g) over every assignment in {0, 1/2, 1}^n."""
    _refuse_above(g, cap, "brute_lp")
    n = g.n
    if n == 0:
        return Fraction(0)
    index = {v: i for i, v in enumerate(g.vertices())}
    grid = _ternary_grid(n)
    feasible = np.ones(len(grid), dtype=bool)
    for u, v in g.edges():
        feasible &= (grid[:, index[u]] + grid[:, index[v]]) >= 2
    best2 = int(grid[feasible].sum(axis=1, dtype=np.int64).min())
    return Fraction(best2, 2)


def _independent_sets(g: Graph):
    order = g.vertices()
    for size in range(1, len(order) + 1):
        for subset in itertools.combinations(order, size):
            if g.is_independent(subset):
                yield frozenset(subset)


def brute_surplus(g: Graph, cap: int = 12) -> tuple[int, frozenset[int]]:
    """Minimum |N(Z)| - |Z| over nonempty independent sets Z, with a minimiser."""
    _refuse_above(g, cap, "brute_surplus")
    if g.n == 0:
        raise OracleRefusal("surplus of the empty graph is undefined")
    best = None
    for z in _independent_sets(g):
        s = len(g.neighborhood_of_set(z)) - len(z)
        if best is None or s < best[0]:
            best = (s, z)
    assert best is not None
    return best


def brute_surplus_containing(g: Graph, v: int, cap: int = 12) -> tuple[int, frozenset[int]]:
    """Minimum surplus over independent sets containing ``v``."""
    _refuse_above(g, cap, "brute_surplus_containing")
    g.neighbors(v)
    best = None
    for z in _independent_sets(g):
        if v in z:
            s = len(g.neighborhood_of_set(z)) - len(z)
            if best is None or s < best[0]:
                best = (s, z)
    assert best is not None
    return best


def all_matchings(g: Graph):
    """Every matching of g (including the empty one), as frozensets of edges."""
    edges = g.edges()

    def rec(i: int, used: frozenset[int], chosen: tuple[Edge, ...]):
        if i == len(edges):
            yield frozenset(chosen)
            return
        yield from rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            yield from rec(i + 1, used | {u, v}, chosen + (edges[i],))

    yield from rec(0, frozenset(), ())


def brute_matching_number(g: Graph, cap: int = 16) -> int:
    """MM(g) by exhaustive recursion: the lowest free vertex stays exposed or pairs up."""
    _refuse_above(g, cap, "brute_matching_number")
    order = g.vertices()
    index = {v: i for i, v in enumerate(order)}
    nbr = [[index[w] for w in g.neighbors(v)] for v in order]

    @functools.lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        i = (free & -free).bit_length() - 1
        rest = free & ~(1 << i)
        out = best(rest)
        for j in nbr[i]:
            if rest >> j & 1:
                out = max(out, 1 + best(rest & ~(1 << j)))
        return out

    return best((1 << len(order)) - 1)


def all_maximum_matchings(g: Graph, cap: int = 8) -> list[frozenset[Edge]]:
    _refuse_above(g, cap, "all_maximum_matchings")
    matchings = list(all_matchings(g))
    best = max(len(m) for m in matchings)
    return [m for m in matchings if len(m) == best]


def brute_gallai_edmonds(g: Graph, cap: int = 8) -> GallaiEdmonds:
    """O read straight off the definition: exposed by some maximum matching."""
    _refuse_above(g, cap, "brute_gallai_edmonds")
    outer: set[int] = set()
    for m in all_maximum_matchings(g, cap):
        covered = {v for e in m for v in e}
        outer |= g.vertex_set() - covered
    outer_f = frozenset(outer)
    inner = frozenset(w for v in outer for w in g.neighbors(v)) - outer_f
    perfect = g.vertex_set() - outer_f - inner
    comps = []
    remaining = set(outer_f)
    while remaining:
        root = min(remaining)
        comp = {root}
        frontier = [root]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x):
                if y in outer_f and y not in comp:
                    comp.add(y)
                    frontier.append(y)
        remaining -= comp
        comps.append(frozenset(comp))
    return GallaiEdmonds(outer_f, inner, perfect, tuple(comps))


# reproducible random graphs -------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014) with its published constants.

    Chosen over :mod:`random` so that a corpus is defined by the algorithm
    alone and can be regenerated bit-for-bit in any language.
    """

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15
    MIX1 = 0xBF58476D1CE4E5B9
    MIX2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GOLDEN_GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * self.MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); pair (i, j), i < j, is drawn in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.next_float() < p]
    return Graph.from_edges(n, edges)
