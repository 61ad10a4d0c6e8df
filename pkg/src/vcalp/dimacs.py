"""DIMACS edge format (``.col``) reading and writing.

External vertex numbers are 1-based; internally vertex ``i`` becomes id
``i - 1``.  Duplicate edge lines collapse, self-loops are rejected.
"""

from __future__ import annotations

from pathlib import Path

from .errors import VertexCoverError
from .graph import Graph


class DimacsError(VertexCoverError, ValueError):
    pass


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size in problem line") from None
            if n < 0 or _m < 0:
                raise DimacsError(f"line {lineno}: negative size in problem line")
        elif parts[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: endpoint outside 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise DimacsError("missing problem line")
    return Graph.from_edges(n, edges)


def read_dimacs(path: str | Path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    """Canonical DIMACS text; vertices are renumbered 1..n in id order."""
    index = {v: i + 1 for i, v in enumerate(g.vertices())}
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {index[u]} {index[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dimacs(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_dimacs(g, comment))
