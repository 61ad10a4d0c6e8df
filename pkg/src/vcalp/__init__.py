"""Exact vertex cover parameterized above 2LP - MM."""

from __future__ import annotations

from .errors import (
    ContractViolation,
    GraphError,
    InvalidVertexError,
    InvariantViolation,
    OracleRefusal,
    VertexCoverError,
)
from .gallai_edmonds import GallaiEdmonds, decompose
from .graph import Graph
from .lpvc import HalfIntegralSolution, lp_optimum, lp_optimum_extreme, lp_value
from .matching import Matching, matching_number, maximum_matching
from .reductions import Budget, reduce_exhaustively
from .solver import Mode, SolveReport, lovasz_plummer_bound, minimum_vertex_cover, solve_mode, solve_vcalp

__all__ = [
    "Budget",
    "ContractViolation",
    "GallaiEdmonds",
    "Graph",
    "GraphError",
    "HalfIntegralSolution",
    "InvalidVertexError",
    "InvariantViolation",
    "Matching",
    "Mode",
    "OracleRefusal",
    "SolveReport",
    "VertexCoverError",
    "decompose",
    "lovasz_plummer_bound",
    "lp_optimum",
    "lp_optimum_extreme",
    "lp_value",
    "matching_number",
    "maximum_matching",
    "minimum_vertex_cover",
    "reduce_exhaustively",
    "solve_mode",
    "solve_vcalp",
]
