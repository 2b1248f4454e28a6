from typing import Iterable, Optional


class IncidenceColoringError(Exception):
    """Base class for all errors raised by the package."""


class MalformedInputError(IncidenceColoringError, ValueError):
    """Raised for unparseable or structurally invalid input (self-loops, bad lines)."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class VertexNotFoundError(IncidenceColoringError, LookupError):
    """Raised when an operation names a vertex the graph does not contain."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} not in graph")


class ContractViolation(IncidenceColoringError, ValueError):
    """Raised when a caller breaks an operation's precondition."""


class InvariantFailure(IncidenceColoringError, RuntimeError):
    """Raised when an extension step finds no admissible color.

    This only happens on a bug or on a coloring that did not meet the step's
    precondition; it is never recovered from.
    """


class NotOuterplanarError(IncidenceColoringError):
    """Raised when a component fails the m <= 2n-3 edge bound."""

    def __init__(self, vertex_count: int, edge_count: int):
        self.vertex_count = vertex_count
        self.edge_count = edge_count
        super().__init__(
            f"not outerplanar: component with n={vertex_count} has "
            f"m={edge_count} > 2n-3={2 * vertex_count - 3} edges"
        )


class NotReducibleError(IncidenceColoringError):
    """Raised when no reducible configuration exists in a component.

    The component is then certified not outerplanar.
    """

    def __init__(self, component: Iterable[int]):
        self.component = tuple(sorted(component))
        preview = ", ".join(str(v) for v in self.component[:10])
        if len(self.component) > 10:
            preview += ", ..."
        super().__init__(
            f"not reducible: component on {len(self.component)} vertices "
            f"({preview}) has no reducible configuration"
        )


class InstanceTooLargeError(IncidenceColoringError, ValueError):
    """Raised by the exact oracles when an instance exceeds the configured cap."""
