"""
Analysis service module.
"""

from .service import AnalysisService

__all__ = [
    "AnalysisService",
]
