"""
Walk and cycle gains.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ...config import get_settings
from ...core.enums import CycleBalance
from ...core.exceptions import BudgetExceededError, InvalidGraphError, NotAWalkError, ZeroEntryError
from ...core.models.graph import CycleReport, GainGraph
from ...core.models.matrix import QMatrix
from ...core.models.quaternion import I, J, K, ONE, Quaternion

logger = logging.getLogger(__name__)

_IMAGINARY_UNITS = (I, -I, J, -J, K, -K)


def walk_gain(graph: GainGraph, walk: Sequence[int]) -> Quaternion:
    """phi(W): product of the traversed edge gains, left to right."""
    if not walk:
        raise NotAWalkError("A walk needs at least one vertex")
    product = ONE
    for u, v in zip(walk, walk[1:]):
        product = product * graph.gain(u, v)
    return product


def _open_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    vertices = tuple(cycle)
    if len(vertices) > 1 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    return vertices


def cycle_gain_from_laplacian(laplacian: QMatrix, cycle: Sequence[int]) -> Quaternion:
    """
    (-1)^s l[c1,c2] l[c2,c3] ... l[cs,c1] for a cycle of length s.

    Off-diagonal Laplacian entries are -phi(e_ij), so this is the cycle gain.
    """
    vertices = _open_cycle(cycle)
    if len(vertices) < 3:
        raise NotAWalkError(f"A cycle needs at least 3 vertices, got {list(vertices)}")
    product = ONE
    for u, v in zip(vertices, vertices[1:] + vertices[:1]):
        entry = laplacian[u, v]
        if entry.is_zero():
            raise ZeroEntryError(f"Laplacian entry ({u}, {v}) is zero; {list(vertices)} is not a cycle")
        product = product * entry
    return -product if len(vertices) % 2 else product


def canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """
    Rotate a cycle to start at its smallest vertex, heading to the smaller neighbour.

    Returned closed: the first vertex is repeated at the end.
    """
    vertices = _open_cycle(cycle)
    start = vertices.index(min(vertices))
    rotated = vertices[start:] + vertices[:start]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = rotated[:1] + tuple(reversed(rotated[1:]))
    return rotated + rotated[:1]


def cycle_report(graph: GainGraph, cycle: Sequence[int]) -> CycleReport:
    """Gain and |1 - gain|^2 of a cycle read in canonical direction."""
    closed = canonical_cycle(cycle)
    if len(closed) < 4:
        raise NotAWalkError(f"A cycle needs at least 3 vertices, got {list(closed[:-1])}")
    if len(set(closed[:-1])) != len(closed) - 1:
        raise NotAWalkError(f"{list(closed)} repeats a vertex")
    gain = walk_gain(graph, closed)
    edges = tuple(graph.edge_index(u, v) for u, v in zip(closed, closed[1:]))
    return CycleReport(vertices=closed, edges=edges, gain=gain, contribution=(ONE - gain).norm_squared())


def unique_cycle(edge_pairs: Iterable[Tuple[int, int]]) -> Optional[Tuple[int, ...]]:
    """
    The cycle left after repeatedly pruning degree-1 vertices.

    Intended for graphs with at most one cycle; returns None for forests.
    """
    adjacency: Dict[int, Set[int]] = {}
    for u, v in edge_pairs:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)

    leaves = [v for v, adj in adjacency.items() if len(adj) <= 1]
    while leaves:
        leaf = leaves.pop()
        for other in adjacency.pop(leaf, set()):
            adjacency[other].discard(leaf)
            if len(adjacency[other]) == 1:
                leaves.append(other)
    if not adjacency:
        return None

    start = min(adjacency)
    walk = [start]
    previous, current = start, min(adjacency[start])
    while current != start:
        walk.append(current)
        following = [v for v in adjacency[current] if v != previous]
        if len(following) != 1:
            raise InvalidGraphError(f"Pruned core at vertex {current} is not a single cycle")
        previous, current = current, following[0]
    return canonical_cycle(walk)


def enumerate_cycles(
    graph: GainGraph,
    max_length: Optional[int] = None,
    budget: Optional[int] = None,
) -> List[CycleReport]:
    """
    Every simple cycle once, as canonical closed sequences.

    Ordered by length, then lexicographically.
    """
    budget = get_settings().cycle_budget if budget is None else budget
    bound = graph.order if max_length is None else max_length
    found: Set[Tuple[int, ...]] = set()
    for raw in nx.simple_cycles(graph.to_networkx(), length_bound=bound):
        if len(raw) < 3:
            continue
        found.add(canonical_cycle(raw))
        if len(found) > budget:
            raise BudgetExceededError(f"More than {budget} cycles in {graph!r}")
    reports = [cycle_report(graph, cycle) for cycle in sorted(found, key=lambda c: (len(c), c))]
    logger.debug(f"Enumerated {len(reports)} cycles in {graph!r}")
    return reports


def classify_cycle_gain(gain: Quaternion, tol: Optional[float] = None) -> CycleBalance:
    """Neutral for 1, real-unbalanced for -1, imaginary-unbalanced for +-i, +-j, +-k."""
    tol = get_settings().tolerance if tol is None else tol
    if gain.isclose(ONE, tol):
        return CycleBalance.NEUTRAL
    if gain.isclose(-ONE, tol):
        return CycleBalance.REAL_UNBALANCED
    if any(gain.isclose(unit, tol) for unit in _IMAGINARY_UNITS):
        return CycleBalance.IMAGINARY_UNBALANCED
    return CycleBalance.UNBALANCED
