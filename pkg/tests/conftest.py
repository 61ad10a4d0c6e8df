from __future__ import annotations

from hypothesis import strategies as st

from vcalp.graph import Graph


def c5_chord() -> Graph:
    """C5 on v1..v5 (ids 0..4) plus the chord v2-v5."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def triangle_with_pendant() -> Graph:
    """Triangle b1 b2 b3 (ids 0, 1, 2) plus a (id 3) adjacent to b1 and b2."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)])


@st.composite
def small_graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
