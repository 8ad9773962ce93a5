"""
Service layer for qgain: linear algebra, gain graphs, reductions and verification.
"""

from .analysis import AnalysisService

__all__ = [
    "AnalysisService",
]
