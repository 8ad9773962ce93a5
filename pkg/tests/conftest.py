"""
Pytest configuration and fixtures.
"""

import json
import math
import os

import numpy as np
import pytest

from qgain.config import get_settings
from qgain.core.models import GainGraph

S = 1 / math.sqrt(2)

# Four vertices, five edges; det L = 9 - 4*sqrt(2).
WORKED_EDGES = [
    (3, 0, [0.0, S, S, 0.0]),
    (0, 1, "i"),
    (1, 2, [0.0, S, 0.0, S]),
    (2, 0, "j"),
    (2, 3, "k"),
]

WORKED_DET = 9 - 4 * math.sqrt(2)


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch, tmp_path):
    """Isolate every test from QGAIN_* variables and the cached settings."""
    for name in list(os.environ):
        if name.startswith("QGAIN_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(0)


@pytest.fixture
def worked_graph():
    """The worked four-vertex example graph."""
    return GainGraph.build(4, WORKED_EDGES)


@pytest.fixture
def worked_document():
    """The worked example as a graph document."""
    return {
        "vertices": ["v1", "v2", "v3", "v4"],
        "edges": [
            {"id": "e1", "from": "v4", "to": "v1", "gain": [0, 0.70710678118654752, 0.70710678118654752, 0]},
            {"id": "e2", "from": "v1", "to": "v2", "gain": "i"},
            {"id": "e3", "from": "v2", "to": "v3", "gain": [0, 0.70710678118654752, 0, 0.70710678118654752]},
            {"id": "e4", "from": "v3", "to": "v1", "gain": "j"},
            {"id": "e5", "from": "v3", "to": "v4", "gain": "k"},
        ],
    }


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph document to a temporary JSON file and return its path."""

    def write(document, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def path_document():
    """Path v1 - v2 - v3 with unit gains."""
    return {
        "vertices": ["v1", "v2", "v3"],
        "edges": [
            {"id": "e1", "from": "v1", "to": "v2", "gain": "i"},
            {"id": "e2", "from": "v2", "to": "v3", "gain": [0.5, 0.5, 0.5, 0.5]},
        ],
    }
