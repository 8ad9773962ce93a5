"""
Analysis service: the queries the command line offers on a gain graph.
"""

import logging
from typing import List, Optional, Tuple

from ...config import Settings, get_settings
from ...core.enums import CycleBalance, DeterminantMethod
from ...core.models.graph import CycleReport, GainGraph
from ...core.models.reduction import ReductionEntry
from ...core.models.report import DeterminantReport, VerificationReport
from ..graph.balance import is_balanced
from ..graph.gains import classify_cycle_gain, enumerate_cycles
from ..graph.matrices import laplacian
from ..linalg.determinants import term_bound
from ..reductions.determinant import det_laplacian_combinatorial, det_laplacian_direct, reduction_report
from ..verify.cross_check import cross_check
from ..verify.lemmas import LemmaSuite

logger = logging.getLogger(__name__)


class AnalysisService:
    """Determinant, balance, reduction, cycle and verification queries with one tolerance."""

    def __init__(self, settings: Optional[Settings] = None, tol: Optional[float] = None):
        self.settings = settings or get_settings()
        self.tol = self.settings.tolerance if tol is None else tol

    def determinant(
        self,
        graph: GainGraph,
        method: DeterminantMethod = DeterminantMethod.BOTH,
        descriptor: Optional[str] = None,
    ) -> DeterminantReport:
        """
        det L(G) by expansion, by reductions or both.

        With both, the routes must agree within tol times a bound on one expansion term.
        """
        method = DeterminantMethod(method)
        direct = combinatorial = discrepancy = None
        if method in (DeterminantMethod.DIRECT, DeterminantMethod.BOTH):
            direct = det_laplacian_direct(graph, self.tol)
        if method in (DeterminantMethod.COMBINATORIAL, DeterminantMethod.BOTH):
            combinatorial = det_laplacian_combinatorial(graph, self.tol, self.settings.reduction_budget)
        agree = True
        if direct is not None and combinatorial is not None:
            discrepancy = abs(direct - combinatorial)
            agree = discrepancy <= self.tol * term_bound(laplacian(graph, tol=self.tol))
            if not agree:
                logger.warning(f"Determinant routes disagree by {discrepancy:.3e} on {graph!r}")
        return DeterminantReport(
            graph_descriptor=descriptor or repr(graph),
            method=method.value,
            det_direct=direct,
            det_combinatorial=combinatorial,
            discrepancy=discrepancy,
            agree=agree,
        )

    def balanced(self, graph: GainGraph) -> bool:
        return is_balanced(graph, self.tol)

    def reductions(self, graph: GainGraph) -> List[ReductionEntry]:
        return reduction_report(graph, self.tol, self.settings.reduction_budget)

    def cycles(self, graph: GainGraph, max_length: Optional[int] = None) -> List[Tuple[CycleReport, CycleBalance]]:
        """Canonical simple cycles with their balance class."""
        reports = enumerate_cycles(graph, max_length, self.settings.cycle_budget)
        return [(report, classify_cycle_gain(report.gain, self.tol)) for report in reports]

    def verify(
        self,
        seed: int,
        trials: int,
        graph: Optional[GainGraph] = None,
        descriptor: Optional[str] = None,
    ) -> VerificationReport:
        """
        Cross-check the graph (if given) and run the lemma suite.

        The result passes only if both parts pass.
        """
        suite = LemmaSuite(tol=self.tol, oracle_rel_tol=self.settings.oracle_rel_tolerance)
        lemmas = suite.run(seed, trials)
        if graph is None:
            return lemmas
        report = cross_check(graph, descriptor, self.tol, self.settings.oracle_rel_tolerance)
        return report.model_copy(
            update={
                "lemma_results": lemmas.lemma_results,
                "passed": report.passed and lemmas.passed,
            }
        )
