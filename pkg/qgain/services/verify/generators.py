"""
Seeded random quaternion matrices and gain graphs.

Every generator takes a numpy Generator so a (seed, lemma) pair replays the
same inputs.
"""

from typing import Callable, List, Optional, Tuple

import networkx as nx
import numpy as np

from ...core.models.graph import GainGraph
from ...core.models.matrix import QMatrix
from ...core.models.quaternion import UNIT_TOKENS, Quaternion

GainSampler = Callable[[np.random.Generator], Quaternion]

_LIPSCHITZ_UNITS = tuple(UNIT_TOKENS.values())


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*rng.standard_normal(4))


def random_unit(rng: np.random.Generator) -> Quaternion:
    """Uniform on the unit 3-sphere."""
    values = rng.standard_normal(4)
    return Quaternion(*(values / np.linalg.norm(values)))


def random_lipschitz_unit(rng: np.random.Generator) -> Quaternion:
    return _LIPSCHITZ_UNITS[int(rng.integers(len(_LIPSCHITZ_UNITS)))]


def random_qmatrix(rng: np.random.Generator, rows: int, cols: Optional[int] = None) -> QMatrix:
    cols = rows if cols is None else cols
    return QMatrix(rng.standard_normal((rows, cols, 4)))


def random_hermitian(rng: np.random.Generator, n: int) -> QMatrix:
    """B + B* for a Gaussian B."""
    base = random_qmatrix(rng, n)
    return base + base.conj_transpose()


def random_tree_pairs(rng: np.random.Generator, n: int) -> List[Tuple[int, int]]:
    """Edges of a uniformly random labelled tree on n vertices."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    tree = nx.from_prufer_sequence([int(v) for v in rng.integers(n, size=n - 2)])
    return sorted(tuple(sorted(edge)) for edge in tree.edges())


def random_pairs(rng: np.random.Generator, n: int, m: int) -> List[Tuple[int, int]]:
    """A connected simple graph: a random tree plus m - n + 1 random extra edges."""
    m = max(n - 1, min(m, n * (n - 1) // 2))
    pairs = random_tree_pairs(rng, n)
    present = set(pairs)
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    extra = rng.choice(len(missing), size=m - len(pairs), replace=False) if m > len(pairs) else []
    return pairs + [missing[int(k)] for k in sorted(extra)]


def _orient(rng: np.random.Generator, pairs: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    return [(u, v) if rng.random() < 0.5 else (v, u) for u, v in pairs]


def random_gain_graph(
    rng: np.random.Generator,
    n: int,
    m: int,
    sampler: GainSampler = random_unit,
) -> GainGraph:
    """Connected random gain graph with random orientations and sampled gains."""
    oriented = _orient(rng, random_pairs(rng, n, m))
    return GainGraph.build(n, [(s, t, sampler(rng)) for s, t in oriented])


def random_tree(rng: np.random.Generator, n: int, sampler: GainSampler = random_unit) -> GainGraph:
    return random_gain_graph(rng, n, n - 1, sampler)


def random_balanced_graph(rng: np.random.Generator, n: int, m: int) -> GainGraph:
    """Gains theta(v_s) conj(theta(v_t)) from a random potential, so every cycle has gain 1."""
    theta = [random_unit(rng) for _ in range(n)]
    oriented = _orient(rng, random_pairs(rng, n, m))
    return GainGraph.build(n, [(s, t, theta[s] * theta[t].conj()) for s, t in oriented])


def random_unicyclic(
    rng: np.random.Generator,
    cycle_length: int,
    extra_vertices: int,
    sampler: GainSampler = random_unit,
) -> GainGraph:
    """A gain cycle with trees hung on it; vertices 0..cycle_length-1 form the cycle."""
    triples = [(s, t, sampler(rng)) for s, t in [(cycle_length - 1, 0)] + [(k - 1, k) for k in range(1, cycle_length)]]
    for vertex in range(cycle_length, cycle_length + extra_vertices):
        anchor = int(rng.integers(vertex))
        pair = (anchor, vertex) if rng.random() < 0.5 else (vertex, anchor)
        triples.append((pair[0], pair[1], sampler(rng)))
    return GainGraph.build(cycle_length + extra_vertices, triples)


def gain_cycle(rng: np.random.Generator, n: int, sampler: GainSampler = random_unit) -> GainGraph:
    """Cycle v1 ... vn with e1 = (vn -> v1) and e_k = (v_(k-1) -> v_k)."""
    return random_unicyclic(rng, n, 0, sampler)
