from enum import Enum
from fractions import Fraction
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GraphFamily(str, Enum):
    """Benchmark graph ensembles"""
    ERDOS_RENYI = "erdos-renyi"
    BARABASI_ALBERT = "barabasi-albert"
    REGULAR = "regular"

    @classmethod
    def parse(cls, value: str) -> "GraphFamily":
        aliases = {"er": cls.ERDOS_RENYI, "gnm": cls.ERDOS_RENYI, "ba": cls.BARABASI_ALBERT,
                   "scale-free": cls.BARABASI_ALBERT, "reg": cls.REGULAR}
        key = value.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


class GeneratorSpec(BaseModel):
    """Seeded recipe for one random graph"""
    model_config = ConfigDict(frozen=True)

    family: GraphFamily
    node_count: int = Field(ge=1)
    mean_degree: Optional[float] = Field(default=None, ge=0)
    density: Optional[float] = Field(default=None, ge=0, le=1)
    edge_count: Optional[int] = Field(default=None, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    require_connected: bool = False

    @model_validator(mode="after")
    def _exactly_one_target(self):
        targets = [t for t in (self.mean_degree, self.density, self.edge_count) if t is not None]
        if len(targets) != 1:
            raise ValueError("exactly one of mean_degree, density or edge_count must be given")
        return self

    @property
    def mean_degree_fraction(self) -> Optional[Fraction]:
        return None if self.mean_degree is None else Fraction(str(self.mean_degree))

    @property
    def density_fraction(self) -> Optional[Fraction]:
        return None if self.density is None else Fraction(str(self.density))

    def with_seed(self, seed: int) -> "GeneratorSpec":
        return self.model_copy(update={"seed": seed})


class DegreeSubsequence(BaseModel):
    """Head or tail of the non-increasing degree sequence"""
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    kind: Literal["head", "tail"]
    length: int = Field(ge=0)
    sum: int = Field(ge=0)
