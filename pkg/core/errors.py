"""Exception hierarchy. Library code raises these; main.py maps them to exit codes."""


class SpecMultError(Exception):
    """Base class for every error raised by specmult."""


class GraphError(SpecMultError, ValueError):
    """Invalid graph construction or a graph that violates an operation's precondition."""


class IsolatedVertexError(GraphError):
    """The normalized Laplacian is undefined for graphs with isolated vertices."""


class CanonizerRangeError(GraphError):
    """Graph too large for the backtracking canonizer."""


class Graph6Error(SpecMultError, ValueError):
    """Malformed graph6 input."""


class ConvergenceError(SpecMultError, RuntimeError):
    """Jacobi iteration hit its sweep cap."""


class PartitionError(SpecMultError, ValueError):
    """Partition does not match the matrix, or is not equitable where it must be."""


class EnumerationRangeError(SpecMultError, ValueError):
    """Requested order is outside the built-in generator's range."""


class FamilyError(SpecMultError, ValueError):
    """Unknown family name or out-of-range family parameters."""


class InconsistencyError(SpecMultError, RuntimeError):
    """A proved lemma failed on concrete input; always an implementation bug."""


class DimensionError(SpecMultError, ValueError):
    """Vector or matrix shapes do not agree."""
