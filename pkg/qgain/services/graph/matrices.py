"""
Incidence, adjacency, degree and Laplacian matrices of a gain graph.
"""

import logging
from typing import Optional

import numpy as np

from ...config import get_settings
from ...core.enums import LaplacianRoute
from ...core.exceptions import RouteMismatchError
from ...core.models.graph import GainGraph
from ...core.models.matrix import QMatrix

logger = logging.getLogger(__name__)


def incidence_matrix(graph: GainGraph) -> QMatrix:
    """
    n x m matrix H(G).

    Column k for e_k = (v_i -> v_j) holds 1 at v_j, -phi(e_ij) at v_i, zeros elsewhere.
    """
    data = np.zeros((graph.order, graph.size, 4))
    for k, edge in enumerate(graph.edges):
        data[edge.target, k] = (1.0, 0.0, 0.0, 0.0)
        data[edge.source, k] = (-edge.gain).components()
    return QMatrix(data)


def adjacency_matrix(graph: GainGraph) -> QMatrix:
    """Hermitian A(G) with a_ij = phi(e_ij) for adjacent vertices."""
    data = np.zeros((graph.order, graph.order, 4))
    for edge in graph.edges:
        data[edge.source, edge.target] = edge.gain.components()
        data[edge.target, edge.source] = edge.gain.conj().components()
    return QMatrix(data)


def degree_matrix(graph: GainGraph) -> QMatrix:
    return QMatrix.diag(graph.degree_sequence())


def laplacian(
    graph: GainGraph,
    route: LaplacianRoute = LaplacianRoute.DEGREE_MINUS_ADJACENCY,
    tol: Optional[float] = None,
    *,
    verify: Optional[bool] = None,
) -> QMatrix:
    """
    L(G) = D - A, or H H* on the incidence route.

    With verify (default: settings.verification_mode) both routes are built
    and must agree entrywise within tol.
    """
    settings = get_settings()
    tol = settings.tolerance if tol is None else tol
    verify = settings.verification_mode if verify is None else verify
    route = LaplacianRoute(route)

    if route is LaplacianRoute.DEGREE_MINUS_ADJACENCY and not verify:
        return degree_matrix(graph) - adjacency_matrix(graph)
    if route is LaplacianRoute.INCIDENCE_PRODUCT and not verify:
        incidence = incidence_matrix(graph)
        return incidence @ incidence.conj_transpose()

    by_degree = degree_matrix(graph) - adjacency_matrix(graph)
    incidence = incidence_matrix(graph)
    by_incidence = incidence @ incidence.conj_transpose()
    deviation = by_degree.max_deviation(by_incidence)
    if deviation > tol:
        logger.warning(f"Laplacian routes differ by {deviation:.3e} on {graph!r}")
        raise RouteMismatchError(f"D - A and H H* differ by {deviation:.3e}")
    return by_degree if route is LaplacianRoute.DEGREE_MINUS_ADJACENCY else by_incidence
