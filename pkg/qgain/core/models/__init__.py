"""
Core data models for qgain.
"""

from .quaternion import Quaternion, ONE, ZERO, I, J, K, UNIT_TOKENS
from .matrix import QMatrix, direct_sum
from .determinant import CycleArrangement, CharPoly
from .graph import GainGraph, OrientedEdge, CycleReport
from .reduction import Reduction, ReductionComponent, ReductionEntry
from .document import GraphDocument, EdgeDocument
from .report import DeterminantReport, VerificationReport, LemmaResult

__all__ = [
    "Quaternion",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "UNIT_TOKENS",
    "QMatrix",
    "direct_sum",
    "CycleArrangement",
    "CharPoly",
    "GainGraph",
    "OrientedEdge",
    "CycleReport",
    "Reduction",
    "ReductionComponent",
    "ReductionEntry",
    "GraphDocument",
    "EdgeDocument",
    "DeterminantReport",
    "VerificationReport",
    "LemmaResult",
]
