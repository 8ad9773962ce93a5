"""
Balance detection and switching.

A gain graph is balanced when every cycle has gain 1, which holds exactly when
a potential function theta with phi(e_ij) = theta(v_i)^-1 theta(v_j) exists.
"""

import logging
from typing import List, Optional, Sequence

import networkx as nx

from ...config import get_settings
from ...core.exceptions import InvalidGraphError
from ...core.models.graph import GainGraph
from ...core.models.quaternion import ONE, Quaternion

logger = logging.getLogger(__name__)


def potential(graph: GainGraph) -> List[Quaternion]:
    """
    Candidate potential from breadth-first spanning trees.

    Each component's smallest vertex gets 1 and theta(v_j) = theta(v_i) phi(e_ij)
    along tree edges, so theta(v_i)^-1 theta(v_j) = phi(e_ij) on the tree.
    """
    theta: List[Optional[Quaternion]] = [None] * graph.order
    undirected = graph.to_networkx()
    for component in graph.components():
        root = component[0]
        theta[root] = ONE
        for parent, child in nx.bfs_edges(undirected, root, sort_neighbors=sorted):
            theta[child] = theta[parent] * graph.gain(parent, child)
    return theta


def _violations(graph: GainGraph, theta: Sequence[Quaternion], tol: float) -> List[int]:
    return [
        position
        for position, edge in enumerate(graph.edges)
        if (theta[edge.source] * edge.gain - theta[edge.target]).norm() > tol
    ]


def is_balanced(graph: GainGraph, tol: Optional[float] = None) -> bool:
    """True iff every cycle of the graph has gain 1."""
    tol = get_settings().tolerance if tol is None else tol
    broken = _violations(graph, potential(graph), tol)
    if broken:
        logger.debug(f"{graph!r} unbalanced at edge {graph.edges[broken[0]].id}")
    return not broken


def has_balanced_component(graph: GainGraph, tol: Optional[float] = None) -> bool:
    """True iff some connected component is balanced; det L(G) = 0 exactly then."""
    tol = get_settings().tolerance if tol is None else tol
    theta = potential(graph)
    broken_vertices = set()
    for position in _violations(graph, theta, tol):
        broken_vertices.add(graph.edges[position].source)
    return any(not broken_vertices.intersection(component) for component in graph.components())


def switch(graph: GainGraph, theta: Sequence[Quaternion], tol: Optional[float] = None) -> GainGraph:
    """
    Switched graph with gains theta(v_i)^-1 phi(e_ij) theta(v_j).

    theta must assign a unit quaternion to every vertex; the Laplacian becomes
    T* L T with T = diag(theta), so determinants and cycle balance are kept.
    """
    tol = get_settings().tolerance if tol is None else tol
    if len(theta) != graph.order:
        raise InvalidGraphError(f"Switching function needs {graph.order} values, got {len(theta)}")
    for vertex, value in enumerate(theta):
        if not value.is_unit(tol):
            raise InvalidGraphError(f"Switching value at {graph.vertex_labels[vertex]} is not a unit quaternion")
    gains = [theta[e.source].conj() * e.gain * theta[e.target] for e in graph.edges]
    return graph.with_gains(gains, tol)
