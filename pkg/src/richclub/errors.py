"""Exception hierarchy shared across the package."""


class RichClubError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(RichClubError):
    """A line of an edge-list or attribute file could not be parsed."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class SelfLoopError(RichClubError):
    """An edge joins a node to itself."""


class DuplicateEdgeError(RichClubError):
    """The same undirected edge appears more than once."""


class DisconnectedGraphError(RichClubError):
    """The graph is not connected and disconnected input was not allowed."""


class DomainError(RichClubError):
    """An argument is outside the domain of the operation."""


class UndefinedRatioError(DomainError):
    """A ratio with zero expectation was requested (degenerate club size)."""


class DegenerateGraphError(DomainError):
    """The graph is too small for the requested operation (fewer than 2 edges)."""
