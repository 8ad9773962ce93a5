"""
JSON graph document schema.
"""

import math
from typing import List, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .quaternion import UNIT_TOKENS
from ...utils.validation import ValidationUtils

GainValue = Union[str, List[float]]


class EdgeDocument(BaseModel):
    """One edge; the gain belongs to the from -> to orientation."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    id: str
    source: str = Field(alias="from")
    target: str = Field(alias="to")
    gain: GainValue

    @field_validator("gain")
    @classmethod
    def _check_gain_shape(cls, value: GainValue) -> GainValue:
        if isinstance(value, str):
            token = value.strip().lower().lstrip("+")
            if token not in UNIT_TOKENS:
                raise ValueError(f"unknown gain token {value!r}; use one of {sorted(UNIT_TOKENS)}")
            return token
        if len(value) != 4:
            raise ValueError(f"gain arrays need 4 components [w, x, y, z], got {len(value)}")
        if not all(math.isfinite(c) for c in value):
            raise ValueError("gain components must be finite")
        return value


class GraphDocument(BaseModel):
    """A gain graph as read from and written to JSON."""

    model_config = ConfigDict(extra="forbid")

    vertices: List[str]
    edges: List[EdgeDocument] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_references(self) -> "GraphDocument":
        repeated = ValidationUtils.find_duplicates(self.vertices)
        if repeated:
            raise ValueError(f"vertex labels must be distinct, repeated: {repeated}")
        repeated = ValidationUtils.find_duplicates([edge.id for edge in self.edges])
        if repeated:
            raise ValueError(f"edge ids must be distinct, repeated: {repeated}")
        declared = set(self.vertices)
        for edge in self.edges:
            for end in (edge.source, edge.target):
                if end not in declared:
                    raise ValueError(f"edge {edge.id} references undeclared vertex {end!r}")
        return self

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)
