"""
Utility modules for qgain.
"""

from .numeric import CompensatedSum, format_real, format_significant
from .validation import ValidationUtils

__all__ = [
    "CompensatedSum",
    "format_real",
    "format_significant",
    "ValidationUtils",
]
