from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CharacteristicAssignment(BaseModel):
    """Binary characteristic c_i over the nodes, in node-id order"""
    model_config = ConfigDict(frozen=True)

    labels: Tuple[int, ...]

    @field_validator("labels")
    @classmethod
    def _binary(cls, labels: Tuple[int, ...]) -> Tuple[int, ...]:
        for position, value in enumerate(labels):
            if value not in (0, 1):
                raise ValueError(f"label at position {position} is {value}, expected 0 or 1")
        return labels

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def n1(self) -> int:
        return sum(self.labels)

    @property
    def n0(self) -> int:
        return len(self.labels) - self.n1

    def complement(self) -> "CharacteristicAssignment":
        return CharacteristicAssignment(labels=tuple(1 - c for c in self.labels))


class DyadCounts(BaseModel):
    model_config = ConfigDict(frozen=True)

    m11: int = Field(ge=0)
    m10: int = Field(ge=0)
    m00: int = Field(ge=0)

    @property
    def total(self) -> int:
        return self.m11 + self.m10 + self.m00

    def swapped(self) -> "DyadCounts":
        """Counts after exchanging the 0 and 1 labels"""
        return DyadCounts(m11=self.m00, m10=self.m10, m00=self.m11)


class DyadStats(BaseModel):
    """Random-placement baseline for fixed (N, M, n1); None marks an undefined ratio"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    node_count: int
    edge_count: int
    n1: int
    density: Fraction
    expected_m11: Fraction
    expected_m10: Fraction
    dyadicity: Optional[Fraction] = None
    heterophilicity: Optional[Fraction] = None
