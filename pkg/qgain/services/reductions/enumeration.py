"""
Full vertex reductions of the incidence matrix and their components.
"""

import logging
import math
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ...config import get_settings
from ...core.enums import ComponentKind
from ...core.exceptions import BudgetExceededError, IndexOutOfRangeError, InvalidGraphError
from ...core.models.graph import GainGraph
from ...core.models.reduction import Reduction, ReductionComponent
from ..graph.gains import cycle_report, unique_cycle

logger = logging.getLogger(__name__)


def enumerate_full_vertex_reductions(graph: GainGraph, budget: Optional[int] = None) -> List[Reduction]:
    """
    All reductions keeping every vertex and exactly n edges.

    Ordered lexicographically by column set; empty when m < n.
    """
    budget = get_settings().reduction_budget if budget is None else budget
    n, m = graph.order, graph.size
    if m < n:
        return []
    count = math.comb(m, n)
    if count > budget:
        raise BudgetExceededError(f"C({m}, {n}) = {count} reductions exceeds the budget {budget}")
    rows = tuple(range(n))
    return [Reduction(rows, cols) for cols in combinations(range(m), n)]


def half_edge_tree_reduction(tree: GainGraph, pendant: int) -> Reduction:
    """Reduction of a tree that drops one pendant vertex row and keeps every edge."""
    if tree.size != tree.order - 1 or not tree.is_connected():
        raise InvalidGraphError(f"{tree!r} is not a tree")
    if not 0 <= pendant < tree.order or tree.degree(pendant) != 1:
        raise InvalidGraphError(f"Vertex {pendant} is not a pendant vertex")
    rows = tuple(v for v in range(tree.order) if v != pendant)
    return Reduction(rows, tuple(range(tree.size)))


def validate_reduction(reduction: Reduction, graph: GainGraph) -> None:
    """Indices in range and no free loops (an edge with neither endpoint kept)."""
    for v in reduction.row_set:
        if not 0 <= v < graph.order:
            raise IndexOutOfRangeError(f"Reduction row {v} outside 0..{graph.order - 1}")
    kept = set(reduction.row_set)
    for k in reduction.col_set:
        if not 0 <= k < graph.size:
            raise IndexOutOfRangeError(f"Reduction column {k} outside 0..{graph.size - 1}")
        edge = graph.edges[k]
        if edge.source not in kept and edge.target not in kept:
            raise InvalidGraphError(f"Edge {edge.id} is a free loop of the reduction")


def _kind(vertices: int, edges: int, half_edges: int) -> ComponentKind:
    if vertices > edges:
        return ComponentKind.DEFICIENT
    if vertices < edges:
        return ComponentKind.EXCESSIVE
    # a connected component with |V| = |E| carries one cycle or one half-edge
    return ComponentKind.HALF_EDGE_TREE if half_edges else ComponentKind.UNICYCLIC


def classify(reduction: Reduction, graph: GainGraph) -> List[ReductionComponent]:
    """
    Split a reduction into connected components and classify each.

    Components are ordered by their smallest vertex; unicyclic components
    carry their cycle report.
    """
    validate_reduction(reduction, graph)
    kept = set(reduction.row_set)
    skeleton = nx.Graph()
    skeleton.add_nodes_from(reduction.row_set)
    full_edges: List[Tuple[int, int, int]] = []
    half_at: Dict[int, List[int]] = {}
    for k in reduction.col_set:
        edge = graph.edges[k]
        if edge.source in kept and edge.target in kept:
            skeleton.add_edge(edge.source, edge.target)
            full_edges.append((k, edge.source, edge.target))
        else:
            end = edge.source if edge.source in kept else edge.target
            half_at.setdefault(end, []).append(k)

    components = []
    for part in sorted((sorted(p) for p in nx.connected_components(skeleton)), key=lambda p: p[0]):
        members = set(part)
        inner = [(k, u, v) for k, u, v in full_edges if u in members]
        halves = sorted(k for v in part for k in half_at.get(v, []))
        kind = _kind(len(part), len(inner) + len(halves), len(halves))
        cycle = None
        if kind is ComponentKind.UNICYCLIC:
            cycle = cycle_report(graph, unique_cycle((u, v) for _, u, v in inner))
        components.append(
            ReductionComponent(
                vertex_set=tuple(part),
                edge_set=tuple(sorted(k for k, _, _ in inner)),
                kind=kind,
                half_edges=tuple(halves),
                cycle=cycle,
            )
        )
    return components


def is_unicycle_like(reduction: Reduction, graph: GainGraph) -> bool:
    return all(component.is_unicycle_like for component in classify(reduction, graph))
