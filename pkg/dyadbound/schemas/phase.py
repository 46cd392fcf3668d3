from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Cell = Tuple[int, int]


class PhaseDiagram(BaseModel):
    """Degeneracy of every (m10, m11) cell over all n1-subsets"""
    model_config = ConfigDict(frozen=True)

    node_count: int = Field(ge=1)
    edge_count: int = Field(ge=0)
    n1: int = Field(ge=0)
    cells: Dict[Cell, int]
    total: int

    @model_validator(mode="after")
    def _consistent(self):
        if sum(self.cells.values()) != self.total:
            raise ValueError("cell degeneracies must sum to the subset total")
        if self.total != comb(self.node_count, self.n1):
            raise ValueError("subset total must equal C(N, n1)")
        for m10, m11 in self.cells:
            if not (0 <= m10 <= self.edge_count and 0 <= m11 <= self.edge_count):
                raise ValueError(f"cell ({m10}, {m11}) lies outside [0, M] x [0, M]")
        return self

    def sorted_cells(self):
        return sorted(self.cells.items())

    def extremal(self) -> Tuple[int, int, int, int]:
        """(min_m11, max_m11, min_m10, max_m10) over the diagram's support"""
        m10s = [c[0] for c in self.cells]
        m11s = [c[1] for c in self.cells]
        return min(m11s), max(m11s), min(m10s), max(m10s)

    def mean_m11(self) -> Fraction:
        return Fraction(sum(count * m11 for (_, m11), count in self.cells.items()), self.total)

    def mean_m10(self) -> Fraction:
        return Fraction(sum(count * m10 for (m10, _), count in self.cells.items()), self.total)

    def m00_cells(self) -> Dict[Cell, int]:
        """Secondary tally keyed by (m10, m00), with m00 = M - m11 - m10"""
        return {(m10, self.edge_count - m11 - m10): count for (m10, m11), count in self.cells.items()}

    def mode_cell(self) -> Cell:
        """Most degenerate cell; ties go to the smallest (m10, m11)"""
        return min(self.cells, key=lambda cell: (-self.cells[cell], cell))


class GainRow(BaseModel):
    """Feasible-region areas and per-bound gains for one n1"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n1: int
    area_old: Fraction
    area_new: Fraction
    gain_ub_m11: Fraction
    gain_ub_m10: Fraction
    gain_lb_m11: Fraction
    gain_lb_m10: Fraction
    gain_total: Fraction
