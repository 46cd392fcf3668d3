from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_serializer

BOUNDS_FIELDS = (
    "n1", "ub_m11_old", "ub_m10_old", "ub_m11", "ub_m10", "lb_m11", "lb_m10",
    "d_min", "d_max", "h_min", "h_max",
)


class BoundsReport(BaseModel):
    """Old and new bounds on m11/m10 for one n1, with the induced D and H ranges"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n1: int
    ub_m11_old: int
    ub_m10_old: int
    ub_m11: int
    ub_m10: int
    lb_m11: int
    lb_m10: int
    d_min: Optional[Fraction] = None
    d_max: Optional[Fraction] = None
    h_min: Optional[Fraction] = None
    h_max: Optional[Fraction] = None

    @field_serializer("d_min", "d_max", "h_min", "h_max")
    def _render_ratio(self, value: Optional[Fraction]):
        if value is None:
            return "undefined"
        if value.denominator == 1:
            return int(value)
        return float(value)
