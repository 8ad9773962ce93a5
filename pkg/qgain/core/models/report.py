"""
Verification report models.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer
from pydantic.alias_generators import to_camel

from ...config import get_settings
from ...utils.numeric import format_real, format_significant


class LemmaResult(BaseModel):
    """Outcome of one lemma over all trials; a failure carries its first witness."""

    model_config = ConfigDict(extra="forbid")

    lemma: str
    passed: bool
    trials: int = 0
    witness: Optional[Dict[str, Any]] = None


class VerificationReport(BaseModel):
    """Cross-check values and lemma outcomes; serialized with camelCase keys."""

    model_config = ConfigDict(extra="forbid", alias_generator=to_camel, populate_by_name=True)

    graph_descriptor: str
    det_direct: Optional[float] = None
    det_combinatorial: Optional[float] = None
    det_oracle_squared: Optional[float] = None
    max_discrepancy: float = 0.0
    lemma_results: List[LemmaResult] = Field(default_factory=list)
    passed: bool = True

    @field_serializer("det_direct", "det_combinatorial", "det_oracle_squared")
    def _decimal_text(self, value: Optional[float]) -> Optional[str]:
        return None if value is None else format_real(value, get_settings().output_decimals)

    @field_serializer("max_discrepancy")
    def _discrepancy_text(self, value: float) -> str:
        return format_significant(value, get_settings().output_decimals)

    @property
    def failed_lemmas(self) -> List[str]:
        return [result.lemma for result in self.lemma_results if not result.passed]

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)


class DeterminantReport(BaseModel):
    """det L(G) by the requested routes and, with both, their discrepancy."""

    model_config = ConfigDict(extra="forbid", alias_generator=to_camel, populate_by_name=True)

    graph_descriptor: str
    method: str
    det_direct: Optional[float] = None
    det_combinatorial: Optional[float] = None
    discrepancy: Optional[float] = None
    agree: bool = True

    @field_serializer("det_direct", "det_combinatorial")
    def _decimal_text(self, value: Optional[float]) -> Optional[str]:
        return None if value is None else format_real(value, get_settings().output_decimals)

    @field_serializer("discrepancy")
    def _discrepancy_text(self, value: Optional[float]) -> Optional[str]:
        return None if value is None else format_significant(value, get_settings().output_decimals)

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=indent)
