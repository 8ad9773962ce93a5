"""
Independent balance check by explicit cycle enumeration.
"""

from typing import Optional

from ...config import get_settings
from ...core.models.graph import GainGraph
from ..graph.gains import enumerate_cycles


def balance_oracle(graph: GainGraph, tol: Optional[float] = None, budget: Optional[int] = None) -> bool:
    """True iff every simple cycle has gain 1 within tol."""
    tol = get_settings().tolerance if tol is None else tol
    return all((report.gain - 1.0).norm() <= tol for report in enumerate_cycles(graph, budget=budget))
