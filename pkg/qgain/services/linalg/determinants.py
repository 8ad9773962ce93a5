"""
Row and column determinants of quaternion matrices and what is built on them.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ...config import get_settings
from ...core.exceptions import (
    DeterminantMismatchError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotHermitianError,
    NotRealError,
    SizeCapExceededError,
)
from ...core.models.determinant import CharPoly, CycleArrangement, Factor
from ...core.models.matrix import QMatrix
from ...core.models.quaternion import Quaternion, hamilton_tuple
from ...utils.numeric import CompensatedSum

logger = logging.getLogger(__name__)

Arranger = Callable[[Sequence[int], int], CycleArrangement]

# Term plans up to this size are cached per (n, pivot, kind).
_CACHED_PLAN_SIZE = 7

_ONE = (1.0, 0.0, 0.0, 0.0)
_ZERO = (0.0, 0.0, 0.0, 0.0)


def canonical_arrangement(permutation: Sequence[int], pivot: int) -> CycleArrangement:
    """
    Write permutation (k -> permutation[k]) in the canonical cycle order for pivot.

    The pivot cycle comes first; every other cycle is rotated to start at its
    minimum and those cycles are sorted by that minimum.
    """
    n = len(permutation)
    seen = [False] * n
    cycles: List[Tuple[int, ...]] = []
    # scanning starts ascending, so each later cycle is found at its minimum
    for start in [pivot] + [k for k in range(n) if k != pivot]:
        if seen[start]:
            continue
        cycle = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = permutation[current]
        cycles.append(tuple(cycle))
    return CycleArrangement(pivot=pivot, cycles=tuple(cycles))


def iter_arrangements(n: int, pivot: int, arrange: Arranger = canonical_arrangement) -> Iterator[CycleArrangement]:
    """One arrangement per permutation, in lexicographic permutation order."""
    for permutation in permutations(range(n)):
        yield arrange(permutation, pivot)


def arrangements(n: int, pivot: int) -> List[CycleArrangement]:
    """All n! canonical cycle arrangements for the given pivot."""
    if not 0 <= pivot < n:
        raise IndexOutOfRangeError(f"Pivot {pivot} outside 0..{n - 1}")
    return list(iter_arrangements(n, pivot))


@lru_cache(maxsize=128)
def _cached_plan(n: int, pivot: int, column: bool) -> Tuple[Tuple[int, Tuple[Factor, ...]], ...]:
    return tuple(_plan_terms(iter_arrangements(n, pivot), column))


def _plan_terms(items: Iterator[CycleArrangement], column: bool) -> Iterator[Tuple[int, Tuple[Factor, ...]]]:
    for arrangement in items:
        factors = arrangement.column_factors() if column else arrangement.row_factors()
        yield arrangement.sign, factors


def _term_plan(n: int, pivot: int, column: bool, arrange: Arranger):
    if arrange is canonical_arrangement and n <= _CACHED_PLAN_SIZE:
        return _cached_plan(n, pivot, column)
    return _plan_terms(iter_arrangements(n, pivot, arrange), column)


def _check_square(matrix: QMatrix) -> None:
    if not matrix.is_square:
        raise DimensionMismatchError(f"Determinant needs a square matrix, got {matrix.shape}")


def _check_cap(n: int, size_cap: Optional[int]) -> None:
    cap = get_settings().size_cap if size_cap is None else size_cap
    if n > cap:
        raise SizeCapExceededError(f"Matrix order {n} exceeds the permutation-sum cap {cap}")


def _permutation_sum(
    matrix: QMatrix,
    pivot: int,
    column: bool,
    size_cap: Optional[int],
    arrange: Arranger,
) -> Quaternion:
    _check_square(matrix)
    n = matrix.rows
    if not 0 <= pivot < n:
        raise IndexOutOfRangeError(f"Pivot {pivot} outside 0..{n - 1}")
    _check_cap(n, size_cap)

    entries = matrix.entry_tuples()
    total = CompensatedSum()
    for sign, factors in _term_plan(n, pivot, column, arrange):
        product = _ONE
        for row, col in factors:
            entry = entries[row][col]
            if entry == _ZERO:
                product = None
                break
            product = hamilton_tuple(product, entry)
        if product is not None:
            total.add(product, sign)
    return Quaternion(*total.result())


def rdet(matrix: QMatrix, i: int, *, size_cap: Optional[int] = None, arrange: Arranger = canonical_arrangement) -> Quaternion:
    """i-th row determinant: cycle products read left to right, pivot cycle first."""
    return _permutation_sum(matrix, i, False, size_cap, arrange)


def cdet(matrix: QMatrix, j: int, *, size_cap: Optional[int] = None, arrange: Arranger = canonical_arrangement) -> Quaternion:
    """j-th column determinant: cycle products read right to left, pivot cycle last."""
    return _permutation_sum(matrix, j, True, size_cap, arrange)


def _require_hermitian(matrix: QMatrix, tol: float) -> None:
    _check_square(matrix)
    deviation = matrix.hermitian_deviation()
    if deviation > tol:
        raise NotHermitianError(f"Matrix deviates from its conjugate transpose by {deviation:.3e}")


def term_bound(matrix: QMatrix, order: Optional[int] = None) -> float:
    """Bound on the size of one permutation term of an order-n determinant, used to scale tolerances."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 1.0
    largest = float(np.linalg.norm(matrix.data, axis=-1).max())
    return max(1.0, largest) ** (matrix.rows if order is None else order)


def _real_part(value: Quaternion, limit: float) -> float:
    residue = value.imag_norm()
    if residue > limit:
        raise NotRealError(f"Hermitian determinant has imaginary residue {residue:.3e} (limit {limit:.3e})")
    return value.w


def det_hermitian(
    matrix: QMatrix,
    tol: Optional[float] = None,
    *,
    verify: Optional[bool] = None,
    size_cap: Optional[int] = None,
) -> float:
    """
    Determinant of a Hermitian quaternion matrix.

    All row and column determinants of a Hermitian matrix coincide and are
    real; rdet_0 is returned. With verify (default: settings.verification_mode)
    every rdet_i and cdet_i is computed and compared.
    """
    settings = get_settings()
    tol = settings.tolerance if tol is None else tol
    verify = settings.verification_mode if verify is None else verify
    _require_hermitian(matrix, tol)
    return _det_hermitian_unchecked(matrix, tol, verify, size_cap)


def _det_hermitian_unchecked(matrix: QMatrix, tol: float, verify: bool, size_cap: Optional[int]) -> float:
    n = matrix.rows
    if n == 0:
        return 1.0
    # rounding in the imaginary parts grows with the size of the terms
    limit = tol * term_bound(matrix)
    value = _real_part(rdet(matrix, 0, size_cap=size_cap), limit)
    if verify:
        for pivot in range(n):
            for kind, candidate in (("rdet", rdet(matrix, pivot, size_cap=size_cap)),
                                    ("cdet", cdet(matrix, pivot, size_cap=size_cap))):
                gap = (candidate - value).norm()
                if gap > limit:
                    logger.warning(f"{kind}_{pivot} differs from rdet_0 by {gap:.3e}")
                    raise DeterminantMismatchError(
                        f"{kind}_{pivot} = {candidate} disagrees with rdet_0 = {value!r}"
                    )
        logger.debug(f"Verified {2 * n} determinants of a {n}x{n} Hermitian matrix")
    return value


def principal_minor_sum(matrix: QMatrix, s: int, tol: Optional[float] = None, *, size_cap: Optional[int] = None) -> float:
    """Sum of det A[alpha, alpha] over all s-element index sets alpha."""
    tol = get_settings().tolerance if tol is None else tol
    _require_hermitian(matrix, tol)
    return _principal_minor_sum_unchecked(matrix, s, tol, size_cap)


def _principal_minor_sum_unchecked(matrix: QMatrix, s: int, tol: float, size_cap: Optional[int]) -> float:
    n = matrix.rows
    if not 0 <= s <= n:
        raise IndexOutOfRangeError(f"Minor order {s} outside 0..{n}")
    return math.fsum(
        _det_hermitian_unchecked(matrix.principal(alpha), tol, False, size_cap)
        for alpha in combinations(range(n), s)
    )


def char_poly_hermitian(matrix: QMatrix, tol: Optional[float] = None, *, size_cap: Optional[int] = None) -> CharPoly:
    """Characteristic polynomial coefficients d_1..d_n as principal minor sums."""
    tol = get_settings().tolerance if tol is None else tol
    _require_hermitian(matrix, tol)
    _check_cap(matrix.rows, size_cap)
    coefficients = tuple(
        _principal_minor_sum_unchecked(matrix, s, tol, size_cap) for s in range(1, matrix.rows + 1)
    )
    return CharPoly(coefficients=coefficients)


def is_invertible(matrix: QMatrix, tol: Optional[float] = None, *, size_cap: Optional[int] = None) -> bool:
    """A is invertible iff det(A A*) is nonzero."""
    tol = get_settings().tolerance if tol is None else tol
    _check_square(matrix)
    gram = matrix @ matrix.conj_transpose()
    return _det_hermitian_unchecked(gram, tol, False, size_cap) > tol


def _largest_nonvanishing_order(gram: QMatrix, upper: int, tol: float, size_cap: Optional[int]) -> int:
    for s in range(upper, 0, -1):
        if _principal_minor_sum_unchecked(gram, s, tol, size_cap) > tol:
            return s
    return 0


def rank_determinantal(matrix: QMatrix, tol: Optional[float] = None, *, size_cap: Optional[int] = None) -> int:
    """Largest order of a nonvanishing principal minor sum of A A* (checked against A* A)."""
    tol = get_settings().tolerance if tol is None else tol
    upper = min(matrix.rows, matrix.cols)
    if upper == 0:
        return 0
    _check_cap(upper, size_cap)
    left = _largest_nonvanishing_order(matrix @ matrix.conj_transpose(), upper, tol, size_cap)
    right = _largest_nonvanishing_order(matrix.conj_transpose() @ matrix, upper, tol, size_cap)
    if left != right:
        raise DeterminantMismatchError(f"rank A A* = {left} but rank A* A = {right}")
    return left
