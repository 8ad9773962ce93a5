"""
Custom exceptions for qgain.
"""

from .algebra import (
    QuaternionError,
    NonFiniteComponentError,
    ZeroDivisorError,
    MatrixError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotHermitianError,
    NotRealError,
    DeterminantMismatchError,
)
from .graph import (
    GainGraphError,
    InvalidGraphError,
    NonUnitGainError,
    RouteMismatchError,
    NotAWalkError,
    ZeroEntryError,
    GainsNotInLipschitzUnitsError,
    GraphDocumentError,
)
from .limits import LimitExceededError, SizeCapExceededError, BudgetExceededError

__all__ = [
    "QuaternionError",
    "NonFiniteComponentError",
    "ZeroDivisorError",
    "MatrixError",
    "DimensionMismatchError",
    "IndexOutOfRangeError",
    "NotHermitianError",
    "NotRealError",
    "DeterminantMismatchError",
    "GainGraphError",
    "InvalidGraphError",
    "NonUnitGainError",
    "RouteMismatchError",
    "NotAWalkError",
    "ZeroEntryError",
    "GainsNotInLipschitzUnitsError",
    "GraphDocumentError",
    "LimitExceededError",
    "SizeCapExceededError",
    "BudgetExceededError",
]
