"""
Quaternion unit gain graph data models.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import InvalidGraphError, NonUnitGainError, NotAWalkError
from .quaternion import Quaternion
from ...config import get_settings


@dataclass(frozen=True)
class OrientedEdge:
    """An edge stored in one orientation; the reverse gain is conj(gain)."""

    id: str
    source: int
    target: int
    gain: Quaternion

    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.source, self.target)

    def other(self, vertex: int) -> int:
        if vertex == self.source:
            return self.target
        if vertex == self.target:
            return self.source
        raise InvalidGraphError(f"Vertex {vertex} is not an endpoint of edge {self.id}")

    def gain_from(self, vertex: int) -> Quaternion:
        """Gain of the edge traversed away from vertex."""
        if vertex == self.source:
            return self.gain
        if vertex == self.target:
            return self.gain.conj()
        raise InvalidGraphError(f"Vertex {vertex} is not an endpoint of edge {self.id}")


@dataclass(frozen=True)
class CycleReport:
    """A cycle as a closed vertex sequence with its gain and |1 - gain|^2."""

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    gain: Quaternion
    contribution: float

    @property
    def length(self) -> int:
        return len(self.edges)


class GainGraph:
    """
    Simple graph whose oriented edges carry unit quaternion gains.

    Vertices are indexed 0..n-1 in label order and edges 0..m-1 in input
    order. Instances are immutable.
    """

    __slots__ = ("_labels", "_edges", "_index", "_edge_at", "_neighbors")

    def __init__(
        self,
        vertex_labels: Sequence[str],
        edges: Iterable[OrientedEdge],
        tol: Optional[float] = None,
    ) -> None:
        tol = get_settings().tolerance if tol is None else tol
        labels = tuple(str(label) for label in vertex_labels)
        index: Dict[str, int] = {}
        for position, label in enumerate(labels):
            if label in index:
                raise InvalidGraphError(f"Duplicate vertex label {label!r}")
            index[label] = position

        edge_list = tuple(edges)
        edge_at: Dict[FrozenSet[int], int] = {}
        neighbors: List[List[int]] = [[] for _ in labels]
        seen_ids = set()
        for position, edge in enumerate(edge_list):
            if edge.id in seen_ids:
                raise InvalidGraphError(f"Duplicate edge id {edge.id!r}")
            seen_ids.add(edge.id)
            for end in edge.endpoints:
                if not 0 <= end < len(labels):
                    raise InvalidGraphError(f"Edge {edge.id} references unknown vertex {end}")
            if edge.source == edge.target:
                raise InvalidGraphError(f"Edge {edge.id} is a self-loop")
            key = frozenset(edge.endpoints)
            if key in edge_at:
                raise InvalidGraphError(
                    f"Edge {edge.id} duplicates edge {edge_list[edge_at[key]].id}; multigraphs are not supported"
                )
            if not edge.gain.is_unit(tol):
                raise NonUnitGainError(f"Edge {edge.id} has non-unit gain {edge.gain} (|q| = {edge.gain.norm():.6g})")
            edge_at[key] = position
            neighbors[edge.source].append(edge.target)
            neighbors[edge.target].append(edge.source)

        self._labels = labels
        self._edges = edge_list
        self._index = index
        self._edge_at = edge_at
        self._neighbors = tuple(tuple(sorted(adj)) for adj in neighbors)

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int, object]],
        tol: Optional[float] = None,
    ) -> "GainGraph":
        """Graph on vertices v1..vn from (source, target, gain) triples; edges named e1..em."""
        oriented = [
            OrientedEdge(id=f"e{k + 1}", source=s, target=t, gain=Quaternion.coerce(g))
            for k, (s, t, g) in enumerate(edges)
        ]
        return cls([f"v{i + 1}" for i in range(n)], oriented, tol)

    # Structure

    @property
    def vertex_labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def edges(self) -> Tuple[OrientedEdge, ...]:
        return self._edges

    @property
    def order(self) -> int:
        return len(self._labels)

    @property
    def size(self) -> int:
        return len(self._edges)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidGraphError(f"Unknown vertex {label!r}") from None

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        return self._neighbors[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._neighbors[vertex])

    def degree_sequence(self) -> List[int]:
        return [len(adj) for adj in self._neighbors]

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._edge_at.get(frozenset((u, v)))

    def gain(self, u: int, v: int) -> Quaternion:
        """phi(e_uv); the reverse orientation is derived by conjugation."""
        position = self.edge_index(u, v)
        if position is None or u == v:
            raise NotAWalkError(f"Vertices {u} and {v} are not adjacent")
        return self._edges[position].gain_from(u)

    def to_networkx(self) -> nx.Graph:
        """Undirected view with edge attributes index, id and the stored orientation."""
        graph = nx.Graph()
        graph.add_nodes_from((i, {"label": label}) for i, label in enumerate(self._labels))
        for position, edge in enumerate(self._edges):
            graph.add_edge(edge.source, edge.target, index=position, id=edge.id, source=edge.source)
        return graph

    def components(self) -> List[List[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        parts = [sorted(part) for part in nx.connected_components(self.to_networkx())]
        return sorted(parts, key=lambda part: part[0])

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    # Derived graphs

    def with_gains(self, gains: Sequence[Quaternion], tol: Optional[float] = None) -> "GainGraph":
        """Same underlying graph and orientations with new gains."""
        if len(gains) != self.size:
            raise InvalidGraphError(f"Expected {self.size} gains, got {len(gains)}")
        edges = [
            OrientedEdge(id=e.id, source=e.source, target=e.target, gain=g)
            for e, g in zip(self._edges, gains)
        ]
        return GainGraph(self._labels, edges, tol)

    def __repr__(self) -> str:
        return f"GainGraph(n={self.order}, m={self.size})"
