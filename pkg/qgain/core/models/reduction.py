"""
Reduction data models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..enums import ComponentKind
from .graph import CycleReport


@dataclass(frozen=True)
class Reduction:
    """
    A choice of incidence-matrix rows (vertices) and columns (edges).

    Viewed as a graph, an edge with one selected endpoint is a half-edge.
    """

    row_set: Tuple[int, ...]
    col_set: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_set", tuple(sorted(self.row_set)))
        object.__setattr__(self, "col_set", tuple(sorted(self.col_set)))

    @property
    def is_square(self) -> bool:
        return len(self.row_set) == len(self.col_set)


@dataclass(frozen=True)
class ReductionComponent:
    """A connected component of a reduction and its kind."""

    vertex_set: Tuple[int, ...]
    edge_set: Tuple[int, ...]
    kind: ComponentKind
    half_edges: Tuple[int, ...] = field(default=())
    cycle: Optional[CycleReport] = None

    @property
    def is_unicycle_like(self) -> bool:
        return self.kind.is_unicycle_like


@dataclass(frozen=True)
class ReductionEntry:
    """One full vertex reduction with its components and determinant by both routes."""

    reduction: Reduction
    components: Tuple[ReductionComponent, ...]
    det_direct: float
    det_combinatorial: float

    @property
    def is_unicycle_like(self) -> bool:
        return all(component.is_unicycle_like for component in self.components)
