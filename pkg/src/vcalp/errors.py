"""Exception types shared across the package."""


class VertexCoverError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(VertexCoverError, KeyError):
    """A vertex id was referenced that is not present in the graph."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class GraphError(VertexCoverError, ValueError):
    """Malformed graph input (self-loops, dangling endpoints)."""


class ContractViolation(VertexCoverError):
    """An operation was called outside its documented precondition."""


class InvariantViolation(VertexCoverError, AssertionError):
    """A structural guarantee the algorithm relies on failed at runtime.

    Raised by the solver and the reduction engine when, e.g., a branch does
    not decrease the measure.  Seeing one always indicates a bug.
    """


class OracleRefusal(VertexCoverError):
    """A brute-force oracle was asked to handle a graph above its size cap."""
