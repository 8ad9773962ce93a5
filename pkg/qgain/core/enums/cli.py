"""
Command-line enums.
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the qgain command."""

    OK = 0
    FAILED = 1
    INVALID_INPUT = 2
    NON_UNIT_GAIN = 3
    LIMIT_EXCEEDED = 4
    DISAGREEMENT = 5
