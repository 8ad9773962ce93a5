"""
Command result model.
"""

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.enums import ExitCode


class CommandResult(BaseModel):
    """Result of one command."""

    model_config = ConfigDict(extra="forbid")

    text: str = Field(description="Human-readable output")
    payload: Optional[Dict[str, Any]] = Field(default=None, description="Machine-readable output for --json")
    exit_code: ExitCode = Field(default=ExitCode.OK, description="Process exit code")
