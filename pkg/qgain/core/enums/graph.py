"""
Gain graph enums.
"""

from enum import Enum


class LaplacianRoute(str, Enum):
    """How the Laplacian matrix is built."""

    DEGREE_MINUS_ADJACENCY = "degree-minus-adjacency"
    INCIDENCE_PRODUCT = "incidence-product"


class CycleBalance(str, Enum):
    """Classification of a cycle by its gain."""

    NEUTRAL = "neutral"
    REAL_UNBALANCED = "real-unbalanced"
    IMAGINARY_UNBALANCED = "imaginary-unbalanced"
    UNBALANCED = "unbalanced"

    @property
    def is_balanced(self) -> bool:
        return self is CycleBalance.NEUTRAL
