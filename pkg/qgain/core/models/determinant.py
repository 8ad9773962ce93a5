"""
Value types of the row/column determinant machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

Cycle = Tuple[int, ...]
Factor = Tuple[int, int]


@dataclass(frozen=True)
class CycleArrangement:
    """
    One permutation written as an ordered product of disjoint cycles.

    The first cycle starts at the pivot. Every other cycle starts at its
    smallest element and those cycles appear in ascending order of that
    leading element. Fixed points are 1-cycles, so ``len(cycles)`` is the
    number r of cycles and the term sign is (-1)^(n - r).
    """

    pivot: int
    cycles: Tuple[Cycle, ...]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def sign_parity(self) -> int:
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.size - self.sign_parity) % 2 else 1

    def row_factors(self) -> Tuple[Factor, ...]:
        """(row, col) index pairs of an rdet term, in left-to-right product order."""
        factors: List[Factor] = []
        for cycle in self.cycles:
            walk = cycle + cycle[:1]
            factors.extend(zip(walk, walk[1:]))
        return tuple(factors)

    def column_factors(self) -> Tuple[Factor, ...]:
        """(row, col) index pairs of a cdet term, in left-to-right product order.

        Cycles are multiplied right to left so the pivot cycle is rightmost; a
        cycle (c1 c2 ... cl) contributes a[c1,cl] a[cl,c(l-1)] ... a[c2,c1].
        """
        factors: List[Factor] = []
        for cycle in reversed(self.cycles):
            walk = cycle[:1] + tuple(reversed(cycle[1:])) + cycle[:1]
            factors.extend(zip(walk, walk[1:]))
        return tuple(factors)


@dataclass(frozen=True)
class CharPoly:
    """
    p(t) = t^n - d_1 t^(n-1) + d_2 t^(n-2) - ... + (-1)^n d_n of a Hermitian matrix.

    d_s is the sum of the principal minors of order s.
    """

    coefficients: Tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def determinant(self) -> float:
        return self.coefficients[-1] if self.coefficients else 1.0

    @property
    def trace(self) -> float:
        return self.coefficients[0] if self.coefficients else 0.0

    def monomial_coefficients(self) -> List[float]:
        """Coefficients of t^n, t^(n-1), ..., t^0."""
        return [1.0] + [(-1) ** s * d for s, d in enumerate(self.coefficients, start=1)]

    def __call__(self, t: float) -> float:
        return float(np.polyval(self.monomial_coefficients(), t))
