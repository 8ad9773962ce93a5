"""
Reading and writing gain graph documents.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from ...config import get_settings
from ...core.exceptions import GraphDocumentError
from ...core.models.document import EdgeDocument, GraphDocument
from ...core.models.graph import GainGraph, OrientedEdge
from ...utils.validation import ValidationUtils

logger = logging.getLogger(__name__)


def graph_from_document(
    document: GraphDocument,
    tol: Optional[float] = None,
    renormalize_tol: Optional[float] = None,
) -> GainGraph:
    """Build a GainGraph; vertices keep document order, edges keep input order."""
    settings = get_settings()
    tol = settings.tolerance if tol is None else tol
    renormalize_tol = settings.renormalize_tolerance if renormalize_tol is None else renormalize_tol

    index = {label: position for position, label in enumerate(document.vertices)}
    edges: List[OrientedEdge] = []
    for item in document.edges:
        gain, _ = ValidationUtils.normalize_gain(item.gain, tol, renormalize_tol, item.id)
        edges.append(OrientedEdge(id=item.id, source=index[item.source], target=index[item.target], gain=gain))
    return GainGraph(document.vertices, edges, tol)


def graph_to_document(graph: GainGraph, tol: Optional[float] = None) -> GraphDocument:
    """Document form; Lipschitz unit gains are written as tokens."""
    labels = graph.vertex_labels
    edges = []
    for edge in graph.edges:
        token = edge.gain.lipschitz_unit(tol)
        edges.append(
            EdgeDocument(
                id=edge.id,
                source=labels[edge.source],
                target=labels[edge.target],
                gain=token if token is not None else edge.gain.to_list(),
            )
        )
    return GraphDocument(vertices=list(labels), edges=edges)


def parse_graph(text: Union[str, bytes]) -> GainGraph:
    """Parse a JSON graph document."""
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphDocumentError(f"Invalid graph document: {e}") from e
    return graph_from_document(document)


def load_graph(path: Union[str, Path]) -> GainGraph:
    """Read and parse a JSON graph file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise GraphDocumentError(f"Cannot read graph file {path}: {e}") from e
    graph = parse_graph(text)
    logger.info(f"Loaded {graph!r} from {path}")
    return graph
