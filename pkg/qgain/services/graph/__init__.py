"""
Gain graph services: matrices, cycle gains, balance and documents.
"""

from .balance import has_balanced_component, is_balanced, potential, switch
from .document import graph_from_document, graph_to_document, load_graph, parse_graph
from .gains import (
    canonical_cycle,
    classify_cycle_gain,
    cycle_gain_from_laplacian,
    cycle_report,
    enumerate_cycles,
    unique_cycle,
    walk_gain,
)
from .matrices import adjacency_matrix, degree_matrix, incidence_matrix, laplacian

__all__ = [
    "adjacency_matrix",
    "canonical_cycle",
    "classify_cycle_gain",
    "cycle_gain_from_laplacian",
    "cycle_report",
    "degree_matrix",
    "enumerate_cycles",
    "graph_from_document",
    "graph_to_document",
    "has_balanced_component",
    "incidence_matrix",
    "is_balanced",
    "laplacian",
    "load_graph",
    "parse_graph",
    "potential",
    "switch",
    "unique_cycle",
    "walk_gain",
]
