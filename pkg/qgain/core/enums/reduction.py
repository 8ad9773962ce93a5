"""
Reduction and determinant enums.
"""

from enum import Enum


class ComponentKind(str, Enum):
    """Kind of a connected component of a reduction."""

    UNICYCLIC = "unicyclic"
    HALF_EDGE_TREE = "half-edge-tree"
    DEFICIENT = "deficient"
    EXCESSIVE = "excessive"

    @property
    def is_unicycle_like(self) -> bool:
        """True when the component has as many vertices as edges."""
        return self in (ComponentKind.UNICYCLIC, ComponentKind.HALF_EDGE_TREE)


class DeterminantMethod(str, Enum):
    """Which route the det command uses."""

    DIRECT = "direct"
    COMBINATORIAL = "combinatorial"
    BOTH = "both"

    def __str__(self) -> str:
        return self.value
