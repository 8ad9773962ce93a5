"""
Gain graph and graph document exceptions.
"""


class GainGraphError(Exception):
    """Base exception for gain graph errors."""
    pass


class InvalidGraphError(GainGraphError, ValueError):
    """Exception raised for self-loops, parallel edges, unknown or duplicate vertices."""
    pass


class NonUnitGainError(GainGraphError, ValueError):
    """Exception raised when an edge gain is not a unit quaternion."""
    pass


class RouteMismatchError(GainGraphError):
    """Exception raised when D - A and H H* disagree."""
    pass


class NotAWalkError(GainGraphError, ValueError):
    """Exception raised when consecutive vertices of a walk are not adjacent."""
    pass


class ZeroEntryError(GainGraphError, ValueError):
    """Exception raised when a cycle traverses a zero Laplacian entry."""
    pass


class GainsNotInLipschitzUnitsError(GainGraphError, ValueError):
    """Exception raised when a gain is not one of +-1, +-i, +-j, +-k."""
    pass


class GraphDocumentError(GainGraphError):
    """Exception raised when a graph document cannot be parsed."""
    pass
