"""
Determinants of reductions and of the whole Laplacian.

det L(G) is the sum over full vertex reductions R of det L(R), and det L(R)
vanishes unless every component of R is unicycle-like, in which case it is
the product of |1 - phi(C)|^2 over its cycles.
"""

import logging
import math
from typing import List, Optional, Sequence

from ...config import get_settings
from ...core.enums import ComponentKind, CycleBalance, DeterminantMethod
from ...core.exceptions import (
    BudgetExceededError,
    DeterminantMismatchError,
    DimensionMismatchError,
    GainsNotInLipschitzUnitsError,
)
from ...core.models.graph import GainGraph
from ...core.models.matrix import QMatrix
from ...core.models.reduction import Reduction, ReductionComponent, ReductionEntry
from ..graph.gains import classify_cycle_gain
from ..graph.matrices import incidence_matrix, laplacian
from ..linalg.determinants import det_hermitian, principal_minor_sum, term_bound
from .enumeration import classify, enumerate_full_vertex_reductions

logger = logging.getLogger(__name__)


def _combinatorial(components: Sequence[ReductionComponent], tol: float) -> float:
    if not all(component.is_unicycle_like for component in components):
        return 0.0
    cycles = [c.cycle for c in components if c.kind is ComponentKind.UNICYCLIC]
    # a cycle that is neutral within tol makes L(R) singular
    if any(classify_cycle_gain(cycle.gain, tol) is CycleBalance.NEUTRAL for cycle in cycles):
        return 0.0
    return math.prod(cycle.contribution for cycle in cycles)


def _require_square(reduction: Reduction) -> None:
    if not reduction.is_square:
        raise DimensionMismatchError(
            f"Reduction has {len(reduction.row_set)} rows and {len(reduction.col_set)} columns"
        )


def reduction_laplacian(reduction: Reduction, graph: GainGraph) -> QMatrix:
    """L(R) = H(R) H(R)*."""
    _require_square(reduction)
    block = incidence_matrix(graph).submatrix(reduction.row_set, reduction.col_set)
    return block @ block.conj_transpose()


def component_laplacians(graph: GainGraph, components: Sequence[ReductionComponent]) -> List[QMatrix]:
    """
    H_c H_c* for each component c, with H_c the incidence rows of c and its edges and half-edges.

    Rows of different components share no column, so L(R) is permutation-similar
    to the direct sum of these blocks and det L(R) is their product.
    """
    incidence = incidence_matrix(graph)
    blocks = []
    for component in components:
        block = incidence.submatrix(component.vertex_set, component.edge_set + component.half_edges)
        blocks.append(block @ block.conj_transpose())
    return blocks


def _direct(reduction: Reduction, graph: GainGraph, tol: float, components: Sequence[ReductionComponent]) -> float:
    _require_square(reduction)
    return math.prod(det_hermitian(block, tol) for block in component_laplacians(graph, components))


def det_reduction(
    reduction: Reduction,
    graph: GainGraph,
    method: DeterminantMethod = DeterminantMethod.DIRECT,
    tol: Optional[float] = None,
) -> float:
    """
    det L(R) with L(R) = H(R) H(R)*.

    DIRECT expands the permutation sum of each component block, COMBINATORIAL
    reads it off the components, BOTH computes the two and requires agreement.
    """
    tol = get_settings().tolerance if tol is None else tol
    method = DeterminantMethod(method)
    components = classify(reduction, graph)
    if method is DeterminantMethod.COMBINATORIAL:
        return _combinatorial(components, tol)
    direct = _direct(reduction, graph, tol, components)
    if method is DeterminantMethod.DIRECT:
        return direct
    combinatorial = _combinatorial(components, tol)
    limit = tol * math.prod(term_bound(block) for block in component_laplacians(graph, components))
    if abs(direct - combinatorial) > limit:
        raise DeterminantMismatchError(
            f"Reduction {reduction.col_set}: direct {direct!r} vs combinatorial {combinatorial!r}"
        )
    return direct


def det_laplacian_direct(graph: GainGraph, tol: Optional[float] = None) -> float:
    """det L(G) by permutation expansion of D - A."""
    return det_hermitian(laplacian(graph, tol=tol), tol)


def det_laplacian_combinatorial(
    graph: GainGraph,
    tol: Optional[float] = None,
    budget: Optional[int] = None,
) -> float:
    """det L(G) as the sum over unicycle-like reductions of prod |1 - phi(C)|^2; cycles neutral within tol add 0."""
    tol = get_settings().tolerance if tol is None else tol
    reductions = enumerate_full_vertex_reductions(graph, budget)
    total = math.fsum(_combinatorial(classify(reduction, graph), tol) for reduction in reductions)
    logger.debug(f"Summed {len(reductions)} reductions of {graph!r}")
    return total


def det_laplacian_unit_gains(
    graph: GainGraph,
    tol: Optional[float] = None,
    budget: Optional[int] = None,
) -> float:
    """
    det L(G) for gains in {+-1, +-i, +-j, +-k}.

    Each unicycle-like reduction without neutral cycles adds 4^a 2^b, where a
    counts real-unbalanced and b imaginary-unbalanced cycles.
    """
    tol = get_settings().tolerance if tol is None else tol
    for edge in graph.edges:
        if edge.gain.lipschitz_unit(tol) is None:
            raise GainsNotInLipschitzUnitsError(f"Edge {edge.id} has gain {edge.gain}")

    total = 0
    for reduction in enumerate_full_vertex_reductions(graph, budget):
        components = classify(reduction, graph)
        if not all(component.is_unicycle_like for component in components):
            continue
        real_unbalanced = imaginary_unbalanced = 0
        neutral = False
        for component in components:
            if component.kind is not ComponentKind.UNICYCLIC:
                continue
            balance = classify_cycle_gain(component.cycle.gain, tol)
            if balance is CycleBalance.NEUTRAL:
                neutral = True
                break
            if balance is CycleBalance.REAL_UNBALANCED:
                real_unbalanced += 1
            else:
                imaginary_unbalanced += 1
        if not neutral:
            total += 4 ** real_unbalanced * 2 ** imaginary_unbalanced
    return float(total)


def det_laplacian_edge_minors(
    graph: GainGraph,
    tol: Optional[float] = None,
    budget: Optional[int] = None,
) -> float:
    """det L(G) as the sum of the order-n principal minors of H* H."""
    budget = get_settings().reduction_budget if budget is None else budget
    n, m = graph.order, graph.size
    if m < n:
        return 0.0
    count = math.comb(m, n)
    if count > budget:
        raise BudgetExceededError(f"C({m}, {n}) = {count} edge minors exceeds the budget {budget}")
    incidence = incidence_matrix(graph)
    return principal_minor_sum(incidence.conj_transpose() @ incidence, n, tol)


def reduction_report(
    graph: GainGraph,
    tol: Optional[float] = None,
    budget: Optional[int] = None,
) -> List[ReductionEntry]:
    """Every full vertex reduction with its components and both determinant values."""
    tol = get_settings().tolerance if tol is None else tol
    entries = []
    for reduction in enumerate_full_vertex_reductions(graph, budget):
        components = classify(reduction, graph)
        entries.append(
            ReductionEntry(
                reduction=reduction,
                components=tuple(components),
                det_direct=_direct(reduction, graph, tol, components),
                det_combinatorial=_combinatorial(components, tol),
            )
        )
    return entries
