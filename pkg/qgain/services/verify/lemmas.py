"""
Randomized lemma suite for the determinant identities.

Each lemma draws its inputs from numpy.random.default_rng([seed, index]),
where index is the lemma's position in the catalog, so a report is fully
determined by (seed, trials) and selecting a subset of lemmas does not
change what each lemma sees.
"""

import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from ...config import get_settings
from ...core.enums import DeterminantMethod
from ...core.exceptions import GainGraphError, LimitExceededError, MatrixError, QuaternionError
from ...core.models.graph import GainGraph
from ...core.models.matrix import QMatrix, direct_sum
from ...core.models.quaternion import Quaternion
from ...core.models.report import LemmaResult, VerificationReport
from ..graph.balance import has_balanced_component, is_balanced, potential, switch
from ..graph.document import graph_to_document
from ..graph.gains import cycle_gain_from_laplacian, cycle_report, enumerate_cycles, unique_cycle, walk_gain
from ..graph.matrices import adjacency_matrix, degree_matrix, incidence_matrix, laplacian
from ..linalg.adjoint import oracle_determinant
from ..linalg.determinants import cdet, det_hermitian, principal_minor_sum, rdet, term_bound
from ..reductions.determinant import (
    component_laplacians,
    det_laplacian_combinatorial,
    det_laplacian_edge_minors,
    det_laplacian_unit_gains,
    det_reduction,
    reduction_laplacian,
)
from ..reductions.enumeration import classify, enumerate_full_vertex_reductions, half_edge_tree_reduction
from . import generators as gen
from .oracle import balance_oracle

logger = logging.getLogger(__name__)

Witness = Optional[Dict[str, Any]]
Check = Callable[[np.random.Generator], Witness]


@dataclass(frozen=True)
class DeterminantBackend:
    """Row and column determinant functions exercised by the algebraic lemmas."""

    rdet: Callable[[QMatrix, int], Quaternion] = rdet
    cdet: Callable[[QMatrix, int], Quaternion] = cdet


def _graph_witness(graph: GainGraph, **extra: Any) -> Dict[str, Any]:
    return {"graph": graph_to_document(graph).model_dump(by_alias=True), **extra}


def _matrix_witness(matrix: QMatrix, **extra: Any) -> Dict[str, Any]:
    return {"matrix": matrix.to_list(), **extra}


def _size(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, high + 1))


class LemmaSuite:
    """
    Runs the identity catalog on seeded random instances.

    The backend is injectable so a deliberately broken rdet/cdet can be shown
    to fail the suite.
    """

    def __init__(
        self,
        backend: Optional[DeterminantBackend] = None,
        tol: Optional[float] = None,
        oracle_rel_tol: Optional[float] = None,
    ) -> None:
        settings = get_settings()
        self.backend = backend or DeterminantBackend()
        self.tol = settings.tolerance if tol is None else tol
        self.oracle_rel_tol = settings.oracle_rel_tolerance if oracle_rel_tol is None else oracle_rel_tol
        self._checks: Dict[str, Check] = {
            "hermitian_determinant_agreement": self.hermitian_determinant_agreement,
            "conjugation_duality": self.conjugation_duality,
            "row_combination_invariance": self.row_combination_invariance,
            "column_combination_invariance": self.column_combination_invariance,
            "principal_minor_sum_equality": self.principal_minor_sum_equality,
            "positive_semidefinite": self.positive_semidefinite,
            "complex_adjoint_oracle": self.complex_adjoint_oracle,
            "laplacian_route_agreement": self.laplacian_route_agreement,
            "cycle_gain_invariance": self.cycle_gain_invariance,
            "tree_determinant": self.tree_determinant,
            "cycle_determinant": self.cycle_determinant,
            "unicyclic_determinant": self.unicyclic_determinant,
            "half_edge_tree_determinant": self.half_edge_tree_determinant,
            "reduction_route_agreement": self.reduction_route_agreement,
            "component_factorization": self.component_factorization,
            "main_theorem": self.main_theorem,
            "edge_minor_route": self.edge_minor_route,
            "unit_gain_corollary": self.unit_gain_corollary,
            "balance_theorem_balanced": self.balance_theorem_balanced,
            "balance_theorem_unbalanced": self.balance_theorem_unbalanced,
            "balance_oracle_agreement": self.balance_oracle_agreement,
            "switching_invariance": self.switching_invariance,
        }

    @property
    def lemma_names(self) -> List[str]:
        return list(self._checks)

    def run(
        self,
        seed: int,
        trials: int,
        lemmas: Optional[Sequence[str]] = None,
        descriptor: str = "lemma-suite",
    ) -> VerificationReport:
        """Run every selected lemma on `trials` instances; a failure stops that lemma with a witness."""
        if seed < 0:
            raise ValueError(f"Seed must be non-negative, got {seed}")
        if trials < 0:
            raise ValueError(f"Trial count must be non-negative, got {trials}")
        selected = self.lemma_names if lemmas is None else list(lemmas)
        unknown = sorted(set(selected) - set(self._checks))
        if unknown:
            raise ValueError(f"Unknown lemmas: {unknown}")

        results: List[LemmaResult] = []
        if trials > 0:
            for index, name in enumerate(self.lemma_names):
                if name in selected:
                    results.append(self._run_one(name, np.random.default_rng([seed, index]), trials))

        return VerificationReport(
            graph_descriptor=descriptor,
            lemma_results=results,
            passed=all(result.passed for result in results),
        )

    def _run_one(self, name: str, rng: np.random.Generator, trials: int) -> LemmaResult:
        check = self._checks[name]
        for trial in range(1, trials + 1):
            try:
                witness = check(rng)
            except (QuaternionError, MatrixError, GainGraphError, LimitExceededError) as e:
                witness = {"error": f"{type(e).__name__}: {e}"}
            if witness is not None:
                witness["trial"] = trial
                logger.warning(f"Lemma {name} failed on trial {trial}")
                return LemmaResult(lemma=name, passed=False, trials=trial, witness=witness)
        logger.debug(f"Lemma {name} passed {trials} trials")
        return LemmaResult(lemma=name, passed=True, trials=trials)

    # Quaternion matrices

    def hermitian_determinant_agreement(self, rng: np.random.Generator) -> Witness:
        """All rdet_i and cdet_i of a Hermitian matrix coincide and are real."""
        matrix = gen.random_hermitian(rng, _size(rng, 2, 5))
        limit = self.tol * term_bound(matrix)
        values = [self.backend.rdet(matrix, i) for i in range(matrix.rows)]
        values += [self.backend.cdet(matrix, i) for i in range(matrix.rows)]
        reference = values[0]
        if reference.imag_norm() > limit or any((v - reference).norm() > limit for v in values):
            return _matrix_witness(matrix, values=[v.to_list() for v in values])
        return None

    def conjugation_duality(self, rng: np.random.Generator) -> Witness:
        """conj(cdet_i(A)) = rdet_i(A*) for a general square A."""
        matrix = gen.random_qmatrix(rng, _size(rng, 1, 4))
        limit = self.tol * term_bound(matrix)
        adjoint = matrix.conj_transpose()
        for i in range(matrix.rows):
            left = self.backend.cdet(matrix, i).conj()
            right = self.backend.rdet(adjoint, i)
            if (left - right).norm() > limit:
                return _matrix_witness(matrix, pivot=i, conj_cdet=left.to_list(), rdet_adjoint=right.to_list())
        return None

    def _combination_coefficients(self, rng: np.random.Generator, n: int, pivot: int) -> Dict[int, Quaternion]:
        others = [k for k in range(n) if k != pivot]
        picked = rng.choice(others, size=min(2, len(others)), replace=False)
        return {int(k): gen.random_quaternion(rng) for k in sorted(picked)}

    def row_combination_invariance(self, rng: np.random.Generator) -> Witness:
        """Adding a left combination of other rows to row i keeps rdet_i of a Hermitian matrix."""
        matrix = gen.random_hermitian(rng, _size(rng, 2, 4))
        pivot = int(rng.integers(matrix.rows))
        coefficients = self._combination_coefficients(rng, matrix.rows, pivot)
        changed = matrix.add_left_row_combination(pivot, coefficients)
        expected = det_hermitian(matrix, self.tol, verify=False)
        value = self.backend.rdet(changed, pivot)
        if (value - expected).norm() > self.tol * term_bound(changed):
            return _matrix_witness(matrix, pivot=pivot, changed=changed.to_list(), rdet=value.to_list(), det=expected)
        return None

    def column_combination_invariance(self, rng: np.random.Generator) -> Witness:
        """Adding a right combination of other columns to column j keeps cdet_j of a Hermitian matrix."""
        matrix = gen.random_hermitian(rng, _size(rng, 2, 4))
        pivot = int(rng.integers(matrix.cols))
        coefficients = self._combination_coefficients(rng, matrix.cols, pivot)
        changed = matrix.add_right_column_combination(pivot, coefficients)
        expected = det_hermitian(matrix, self.tol, verify=False)
        value = self.backend.cdet(changed, pivot)
        if (value - expected).norm() > self.tol * term_bound(changed):
            return _matrix_witness(matrix, pivot=pivot, changed=changed.to_list(), cdet=value.to_list(), det=expected)
        return None

    def principal_minor_sum_equality(self, rng: np.random.Generator) -> Witness:
        """Order-s principal minor sums of A A* and A* A agree."""
        matrix = gen.random_qmatrix(rng, _size(rng, 1, 4), _size(rng, 1, 4))
        order = _size(rng, 1, min(matrix.rows, matrix.cols))
        left_gram = matrix @ matrix.conj_transpose()
        right_gram = matrix.conj_transpose() @ matrix
        limit = self.tol * math.comb(max(matrix.shape), order) * term_bound(left_gram, order)
        left = principal_minor_sum(left_gram, order, self.tol)
        right = principal_minor_sum(right_gram, order, self.tol)
        if abs(left - right) > limit:
            return _matrix_witness(matrix, order=order, left=left, right=right)
        return None

    def positive_semidefinite(self, rng: np.random.Generator) -> Witness:
        """det(B B*) >= 0."""
        matrix = gen.random_qmatrix(rng, _size(rng, 1, 4), _size(rng, 1, 5))
        gram = matrix @ matrix.conj_transpose()
        value = det_hermitian(gram, self.tol)
        if value < -self.tol * term_bound(gram):
            return _matrix_witness(matrix, det=value)
        return None

    def complex_adjoint_oracle(self, rng: np.random.Generator) -> Witness:
        """det chi(A) = det(A)^2 for Hermitian A."""
        matrix = gen.random_hermitian(rng, _size(rng, 1, 4))
        value = det_hermitian(matrix, self.tol)
        oracle = oracle_determinant(matrix)
        limit = self.oracle_rel_tol * term_bound(matrix) ** 2
        if abs(oracle.real - value ** 2) > limit or abs(oracle.imag) > limit:
            return _matrix_witness(matrix, det=value, oracle=[oracle.real, oracle.imag])
        return None

    # Gain graphs

    def _graph(self, rng: np.random.Generator, sampler: gen.GainSampler = gen.random_unit) -> GainGraph:
        n = _size(rng, 3, 6)
        return gen.random_gain_graph(rng, n, _size(rng, n, n + 3), sampler)

    def _det(self, graph: GainGraph) -> float:
        return det_hermitian(laplacian(graph, tol=self.tol), self.tol)

    def laplacian_route_agreement(self, rng: np.random.Generator) -> Witness:
        """D - A equals H H*."""
        n = _size(rng, 2, 6)
        graph = gen.random_gain_graph(rng, n, _size(rng, n - 1, n + 3))
        incidence = incidence_matrix(graph)
        deviation = (degree_matrix(graph) - adjacency_matrix(graph)).max_deviation(incidence @ incidence.conj_transpose())
        if deviation > self.tol:
            return _graph_witness(graph, deviation=deviation)
        return None

    def cycle_gain_invariance(self, rng: np.random.Generator) -> Witness:
        """Every start vertex and direction of a cycle gives a similar gain and the same |1 - gain|^2."""
        graph = self._graph(rng)
        cycles = enumerate_cycles(graph)
        report = cycles[int(rng.integers(len(cycles)))]
        ring = list(report.vertices[:-1])
        matrix = laplacian(graph, tol=self.tol)
        if not cycle_gain_from_laplacian(matrix, ring).isclose(report.gain, self.tol):
            return _graph_witness(graph, cycle=ring, reason="laplacian entries")
        for shift in range(len(ring)):
            for walk in (ring[shift:] + ring[:shift], list(reversed(ring[shift:] + ring[:shift]))):
                gain = walk_gain(graph, walk + walk[:1])
                contribution = (1.0 - gain).norm_squared()
                if not gain.similar(report.gain, self.tol) or abs(contribution - report.contribution) > self.tol:
                    return _graph_witness(graph, cycle=ring, walk=walk, gain=gain.to_list())
        return None

    def tree_determinant(self, rng: np.random.Generator) -> Witness:
        """det L(T) = 0 for a tree."""
        tree = gen.random_tree(rng, _size(rng, 1, 7))
        value = self._det(tree)
        if abs(value) > self.tol:
            return _graph_witness(tree, det=value)
        return None

    def cycle_determinant(self, rng: np.random.Generator) -> Witness:
        """det L(C) = |1 - phi(C)|^2 and rdet_0(H(C)) = 1 - phi(C)."""
        n = _size(rng, 3, 7)
        cycle = gen.gain_cycle(rng, n)
        gain = walk_gain(cycle, list(range(n)) + [0])
        value = self._det(cycle)
        head = self.backend.rdet(incidence_matrix(cycle), 0)
        if abs(value - (1.0 - gain).norm_squared()) > self.tol or not head.isclose(1.0 - gain, self.tol):
            return _graph_witness(cycle, det=value, rdet_incidence=head.to_list(), gain=gain.to_list())
        return None

    def unicyclic_determinant(self, rng: np.random.Generator) -> Witness:
        """A connected unicyclic graph has det L = |1 - phi(C)|^2 of its cycle."""
        graph = gen.random_unicyclic(rng, _size(rng, 3, 5), _size(rng, 0, 3))
        report = cycle_report(graph, unique_cycle(e.endpoints for e in graph.edges))
        value = self._det(graph)
        if abs(value - report.contribution) > self.tol:
            return _graph_witness(graph, det=value, contribution=report.contribution)
        return None

    def half_edge_tree_determinant(self, rng: np.random.Generator) -> Witness:
        """Dropping a pendant vertex row of a tree leaves a reduction with det 1."""
        tree = gen.random_tree(rng, _size(rng, 2, 7))
        pendants = [v for v in range(tree.order) if tree.degree(v) == 1]
        pendant = pendants[int(rng.integers(len(pendants)))]
        reduction = half_edge_tree_reduction(tree, pendant)
        direct = det_reduction(reduction, tree, DeterminantMethod.DIRECT, self.tol)
        combinatorial = det_reduction(reduction, tree, DeterminantMethod.COMBINATORIAL, self.tol)
        if abs(direct - 1.0) > self.tol or abs(combinatorial - 1.0) > self.tol:
            return _graph_witness(tree, pendant=pendant, direct=direct, combinatorial=combinatorial)
        return None

    def reduction_route_agreement(self, rng: np.random.Generator) -> Witness:
        """Each full vertex reduction has the same determinant by expansion and by its components."""
        graph = self._graph(rng)
        for reduction in enumerate_full_vertex_reductions(graph):
            direct = det_reduction(reduction, graph, DeterminantMethod.DIRECT, self.tol)
            combinatorial = det_reduction(reduction, graph, DeterminantMethod.COMBINATORIAL, self.tol)
            if abs(direct - combinatorial) > self.tol:
                return _graph_witness(
                    graph, columns=list(reduction.col_set), direct=direct, combinatorial=combinatorial
                )
        return None

    def component_factorization(self, rng: np.random.Generator) -> Witness:
        """L(R) reordered by components is the direct sum of the component blocks, and det L(R) factors."""
        graph = self._graph(rng)
        reductions = enumerate_full_vertex_reductions(graph)
        reduction = reductions[int(rng.integers(len(reductions)))]
        components = classify(reduction, graph)
        blocks = component_laplacians(graph, components)
        whole = reduction_laplacian(reduction, graph)
        position = {v: k for k, v in enumerate(reduction.row_set)}
        order = [position[v] for component in components for v in component.vertex_set]
        deviation = whole.principal(order).max_deviation(reduce(direct_sum, blocks))
        value = det_hermitian(whole, self.tol)
        factored = math.prod(det_hermitian(block, self.tol) for block in blocks)
        if deviation > self.tol or abs(value - factored) > self.tol * term_bound(whole):
            return _graph_witness(
                graph, columns=list(reduction.col_set), deviation=deviation, det=value, factored=factored
            )
        return None

    def main_theorem(self, rng: np.random.Generator) -> Witness:
        """det L(G) is the sum over unicycle-like reductions of prod |1 - phi(C)|^2."""
        graph = self._graph(rng)
        direct = self._det(graph)
        combinatorial = det_laplacian_combinatorial(graph, self.tol)
        if abs(direct - combinatorial) > self.tol:
            return _graph_witness(graph, direct=direct, combinatorial=combinatorial)
        return None

    def edge_minor_route(self, rng: np.random.Generator) -> Witness:
        """det L(G) is the sum of the order-n principal minors of H* H."""
        graph = self._graph(rng)
        direct = self._det(graph)
        minors = det_laplacian_edge_minors(graph, self.tol)
        if abs(direct - minors) > self.tol:
            return _graph_witness(graph, direct=direct, edge_minors=minors)
        return None

    def unit_gain_corollary(self, rng: np.random.Generator) -> Witness:
        """With gains in {+-1, +-i, +-j, +-k}, det L(G) = sum of 4^a 2^b."""
        graph = self._graph(rng, gen.random_lipschitz_unit)
        direct = self._det(graph)
        counted = det_laplacian_unit_gains(graph, self.tol)
        combinatorial = det_laplacian_combinatorial(graph, self.tol)
        if abs(direct - counted) > self.tol or abs(combinatorial - counted) > self.tol:
            return _graph_witness(graph, direct=direct, counted=counted, combinatorial=combinatorial)
        return None

    def balance_theorem_balanced(self, rng: np.random.Generator) -> Witness:
        """A balanced connected graph has det L = 0."""
        n = _size(rng, 3, 6)
        graph = gen.random_balanced_graph(rng, n, _size(rng, n - 1, n + 3))
        value = self._det(graph)
        if abs(value) > self.tol or not is_balanced(graph, self.tol):
            return _graph_witness(graph, det=value)
        return None

    def balance_theorem_unbalanced(self, rng: np.random.Generator) -> Witness:
        """A connected graph with a non-neutral cycle has det L > 0."""
        graph = self._graph(rng)
        if all((report.gain - 1.0).norm() <= self.oracle_rel_tol for report in enumerate_cycles(graph)):
            return None
        value = self._det(graph)
        if value <= self.oracle_rel_tol or is_balanced(graph, self.tol) or has_balanced_component(graph, self.tol):
            return _graph_witness(graph, det=value)
        return None

    def balance_oracle_agreement(self, rng: np.random.Generator) -> Witness:
        """The potential test and exhaustive cycle enumeration agree."""
        n = _size(rng, 2, 6)
        m = _size(rng, n - 1, n + 3)
        if rng.random() < 0.5:
            graph = gen.random_balanced_graph(rng, n, m)
        else:
            graph = gen.random_gain_graph(rng, n, m, gen.random_lipschitz_unit)
        by_potential = is_balanced(graph, self.tol)
        by_cycles = balance_oracle(graph, self.tol)
        if by_potential != by_cycles:
            return _graph_witness(graph, potential=by_potential, cycles=by_cycles)
        return None

    def switching_invariance(self, rng: np.random.Generator) -> Witness:
        """Switching keeps det L and balance; switching by the potential makes a balanced graph all-ones."""
        graph = self._graph(rng)
        switched = switch(graph, [gen.random_unit(rng) for _ in range(graph.order)], self.tol)
        before, after = self._det(graph), self._det(switched)
        if abs(before - after) > self.tol or is_balanced(graph, self.tol) != is_balanced(switched, self.tol):
            return _graph_witness(graph, det=before, switched_det=after)

        n = _size(rng, 2, 6)
        balanced = gen.random_balanced_graph(rng, n, _size(rng, n - 1, n + 3))
        flattened = switch(balanced, [value.conj() for value in potential(balanced)], self.tol)
        if not all(edge.gain.isclose(1.0, self.tol) for edge in flattened.edges):
            return _graph_witness(balanced, reason="potential switching left a non-identity gain")
        return None


def run_lemma_suite(seed: int, trials: int, lemmas: Optional[Sequence[str]] = None) -> VerificationReport:
    """Run the catalog with the standard determinant backend."""
    return LemmaSuite().run(seed, trials, lemmas)
