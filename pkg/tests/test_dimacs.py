from __future__ import annotations

import pytest
from hypothesis import given, settings

from vcalp.dimacs import DimacsError, format_dimacs, parse_dimacs, read_dimacs, write_dimacs
from vcalp.graph import cycle_graph, petersen_graph

from conftest import small_graphs


def test_parse_basic():
    g = parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g.vertices() == [0, 1, 2] and g.edges() == [(0, 1), (1, 2)]


def test_duplicates_collapse_and_col_header():
    g = parse_dimacs("p col 2 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.m == 1


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\np edge 2 1\n",
        "p edge 2 1\ne 1 1\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2\n",
        "p edge x 1\n",
        "p edge 2 1\nq 1 2\n",
        "c nothing\n",
        "p edge 2 1\np edge 2 1\n",
        "p edge 2 1\ne 1 b\n",
    ],
)
def test_malformed(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_round_trip(g):
    text = format_dimacs(g)
    assert parse_dimacs(text) == g
    assert format_dimacs(parse_dimacs(text)) == text


def test_file_round_trip(tmp_path):
    path = tmp_path / "petersen.col"
    write_dimacs(petersen_graph(), path, comment="petersen")
    assert read_dimacs(path) == petersen_graph()
    assert path.read_text().startswith("c petersen\np edge 10 15\n")
    assert read_dimacs(path) != cycle_graph(10)
