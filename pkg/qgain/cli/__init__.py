"""
Command-line front end.
"""

from .app import build_parser, main
from .commands import CommandHandlers
from .result import CommandResult

__all__ = [
    "CommandHandlers",
    "CommandResult",
    "build_parser",
    "main",
]
