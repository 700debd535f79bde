"""
Exception hierarchy for star-chromatic.

Everything the library raises on purpose derives from StarColoringError, so
callers can catch one type. Input problems also derive from ValueError.
"""

from typing import Any, Optional


class StarColoringError(Exception):
    """Base class for all errors raised by star-chromatic."""


class TreeError(StarColoringError, ValueError):
    """The input does not describe a valid tree."""


class EmptyTree(TreeError):
    """No edges were given and no single vertex was requested."""


class CycleDetected(TreeError):
    """The edge list contains a cycle."""


class Disconnected(TreeError):
    """The edge list describes a forest with more than one component."""


class DuplicateEdge(TreeError):
    """The same edge appears twice."""


class SelfLoop(TreeError):
    """An edge joins a vertex to itself."""


class InvalidVertex(TreeError):
    """A vertex id is outside the tree or unusable for the operation."""


class TreeParseError(TreeError):
    """A tree file could not be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class NotRealizable(StarColoringError):
    """
    An outdegree-vertex sequence has no oriented realization.

    The certificate attribute holds the Infeasible record of the step that
    ran out of candidates.
    """

    def __init__(self, certificate: Any, message: Optional[str] = None):
        self.certificate = certificate
        super().__init__(message or f"sequence is not realizable: {certificate}")


class ProfileMismatch(StarColoringError, ValueError):
    """A graph or coloring disagrees with the 2H-tree profile it is paired with."""


class NotStarColoring(StarColoringError, ValueError):
    """A coloring that was supposed to be a star edge coloring is not one."""


class DomainError(StarColoringError, ValueError):
    """Parameters fall outside the range where a formula or construction applies."""


class ProfileShapeError(DomainError):
    """A profile does not have the shape an operation requires."""


class NotCaterpillar(StarColoringError, ValueError):
    """The tree is not a caterpillar."""


class CoverageMismatch(StarColoringError, ValueError):
    """A coloring does not cover exactly the edges of the tree."""


class Exceeded(StarColoringError):
    """The exact search found no coloring within the allowed palette."""


class TooLarge(StarColoringError, ValueError):
    """The input is too large for an exhaustive routine."""


class InternalError(StarColoringError, RuntimeError):
    """A guarantee the algorithms rely on was broken."""
