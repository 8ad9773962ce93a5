"""
Timing and logging wrapper for command handlers.
"""

import logging
import time
from functools import wraps
from typing import Callable

from .result import CommandResult

logger = logging.getLogger(__name__)


def timed(name: str) -> Callable[[Callable[..., CommandResult]], Callable[..., CommandResult]]:
    """Log a command's start and its exit code with wall-clock time."""

    def decorate(handler: Callable[..., CommandResult]) -> Callable[..., CommandResult]:
        @wraps(handler)
        def run(*args, **kwargs) -> CommandResult:
            start_time = time.perf_counter()
            logger.info(f"Command: {name}")
            result = handler(*args, **kwargs)
            process_time = time.perf_counter() - start_time
            logger.info(f"Command: {name} exit {int(result.exit_code)} in {process_time:.4f}s")
            return result

        return run

    return decorate
