"""
Enums for qgain.
"""

from .cli import ExitCode
from .graph import LaplacianRoute, CycleBalance
from .reduction import ComponentKind, DeterminantMethod

__all__ = [
    "ExitCode",
    "LaplacianRoute",
    "CycleBalance",
    "ComponentKind",
    "DeterminantMethod",
]
