"""
Error hierarchy.
Input problems are ValueErrors; TheoremViolation subclasses are
falsification alarms and must never be swallowed silently.
"""

from typing import Optional


class FullyOptimalError(Exception):
    """Base class of every error raised by this package."""


class GraphError(FullyOptimalError, ValueError):
    """Malformed graph or invalid graph argument."""


class DuplicateEdgeError(GraphError):
    pass


class DanglingEndpointError(GraphError):
    pass


class UnknownEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class VertexLabelError(GraphError):
    """Vertex label using the separator reserved for merged vertices."""


class GraphTooLargeError(GraphError):
    pass


class NotSpanningTreeError(FullyOptimalError, ValueError):
    pass


class NotACocycleError(FullyOptimalError, ValueError):
    pass


class EliminationError(FullyOptimalError, ValueError):
    pass


class NotBipolarError(FullyOptimalError, ValueError):
    pass


class NotUniactiveError(FullyOptimalError, ValueError):
    pass


class OptimizableDigraphError(FullyOptimalError, ValueError):
    pass


class MissingTraceError(FullyOptimalError, ValueError):
    pass


class GeneratorError(FullyOptimalError, ValueError):
    pass


class GraphFormatError(FullyOptimalError, ValueError):
    """Syntax or content error in a graph file, with its line number."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class TheoremViolation(FullyOptimalError):
    """A proven statement failed on a concrete instance."""


class UniquenessViolation(TheoremViolation):
    pass


class FormulationMismatch(TheoremViolation):
    pass


class BijectionViolation(TheoremViolation):
    pass


class InvariantViolation(TheoremViolation):
    pass
