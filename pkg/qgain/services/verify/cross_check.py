"""
Three-way determinant cross-check of a gain graph Laplacian.
"""

import logging
import math
from typing import Optional

from ...config import get_settings
from ...core.models.graph import GainGraph
from ...core.models.report import VerificationReport
from ..graph.matrices import laplacian
from ..linalg.adjoint import oracle_determinant
from ..linalg.determinants import det_hermitian, term_bound
from ..reductions.determinant import det_laplacian_combinatorial

logger = logging.getLogger(__name__)


def cross_check(
    graph: GainGraph,
    descriptor: Optional[str] = None,
    tol: Optional[float] = None,
    oracle_rel_tol: Optional[float] = None,
) -> VerificationReport:
    """
    Compare det L(G) by permutation expansion, by reductions and by the complex adjoint.

    The adjoint gives det(chi(L)) = det(L)^2, so its square root is compared
    with relative tolerance; the two exact routes must agree within tol times
    a bound on one expansion term.
    """
    settings = get_settings()
    tol = settings.tolerance if tol is None else tol
    oracle_rel_tol = settings.oracle_rel_tolerance if oracle_rel_tol is None else oracle_rel_tol

    matrix = laplacian(graph, tol=tol)
    direct = det_hermitian(matrix, tol)
    combinatorial = det_laplacian_combinatorial(graph, tol)
    squared = oracle_determinant(matrix)
    if abs(squared.imag) > oracle_rel_tol * max(1.0, abs(squared.real)):
        logger.warning(f"Complex adjoint determinant has imaginary part {squared.imag:.3e}")
    oracle_root = math.sqrt(max(squared.real, 0.0))

    exact_gap = abs(direct - combinatorial)
    oracle_gaps = (abs(direct - oracle_root), abs(combinatorial - oracle_root))
    scale = max(1.0, abs(direct))
    passed = exact_gap <= tol * term_bound(matrix) and all(gap <= oracle_rel_tol * scale for gap in oracle_gaps)
    if not passed:
        logger.warning(
            f"Determinant routes disagree on {graph!r}: direct={direct!r} "
            f"combinatorial={combinatorial!r} oracle={oracle_root!r}"
        )

    return VerificationReport(
        graph_descriptor=descriptor or repr(graph),
        det_direct=direct,
        det_combinatorial=combinatorial,
        det_oracle_squared=squared.real,
        max_discrepancy=max((exact_gap,) + oracle_gaps),
        passed=passed,
    )
