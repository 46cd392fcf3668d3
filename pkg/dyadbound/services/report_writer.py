import io
import json
import logging
import math
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")

import numpy as np
import pandas as pd
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from dyadbound.config import get_settings
from dyadbound.schemas.bounds import BOUNDS_FIELDS, BoundsReport
from dyadbound.schemas.dyads import CharacteristicAssignment, DyadCounts, DyadStats
from dyadbound.schemas.phase import GainRow, PhaseDiagram
from dyadbound.services.gain_service import GAIN_FIELDS

logger = logging.getLogger(__name__)

UNDEFINED = "undefined"
Rational = Union[int, Fraction, None]


def format_rational(value: Rational, digits: Optional[int] = None) -> str:
    """Decimal text for CSV: integers verbatim, other rationals to `digits` significant digits"""
    if value is None:
        return UNDEFINED
    digits = digits or get_settings().csv_significant_digits
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.{digits}g}"


def json_number(value: Rational) -> Any:
    if value is None:
        return UNDEFINED
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return float(value)


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def bounds_csv(reports: Sequence[BoundsReport]) -> str:
    records = []
    for report in reports:
        record = {name: getattr(report, name) for name in BOUNDS_FIELDS}
        for name in ("d_min", "d_max", "h_min", "h_max"):
            record[name] = format_rational(record[name])
        records.append(record)
    return _to_csv(pd.DataFrame.from_records(records, columns=list(BOUNDS_FIELDS)))


def bounds_json(reports: Sequence[BoundsReport]) -> str:
    return json.dumps([report.model_dump(mode="json") for report in reports], indent=2) + "\n"


def phase_csv(diagram: PhaseDiagram) -> str:
    frame = pd.DataFrame(
        [(m10, m11, count) for (m10, m11), count in diagram.sorted_cells()],
        columns=["m10", "m11", "count"],
    )
    return _to_csv(frame)


def gains_csv(rows: Sequence[GainRow]) -> str:
    records = [{"n1": row.n1, **{name: format_rational(getattr(row, name)) for name in GAIN_FIELDS}} for row in rows]
    return _to_csv(pd.DataFrame.from_records(records, columns=["n1", *GAIN_FIELDS]))


def gains_json(rows: Sequence[GainRow]) -> str:
    records = [{"n1": row.n1, **{name: json_number(getattr(row, name)) for name in GAIN_FIELDS}} for row in rows]
    return json.dumps(records, indent=2) + "\n"


def expected_csv(curves: Iterable[Dict[str, Rational]]) -> str:
    columns = ["n1", "fraction", "density", "expected_m11", "expected_m10"]
    records = [{name: (row[name] if name == "n1" else format_rational(row[name])) for name in columns} for row in curves]
    return _to_csv(pd.DataFrame.from_records(records, columns=columns))


def metrics_json(assignment: CharacteristicAssignment, counts: DyadCounts, stats: DyadStats,
                 classification: Dict[str, str]) -> str:
    payload = {
        "node_count": stats.node_count,
        "edge_count": stats.edge_count,
        "n1": assignment.n1,
        "n0": assignment.n0,
        "m11": counts.m11,
        "m10": counts.m10,
        "m00": counts.m00,
        "density": json_number(stats.density),
        "expected_m11": json_number(stats.expected_m11),
        "expected_m10": json_number(stats.expected_m10),
        "D": json_number(stats.dyadicity),
        "H": json_number(stats.heterophilicity),
        "classification": classification,
    }
    return json.dumps(payload, indent=2) + "\n"


def phase_heatmap_svg(diagram: PhaseDiagram, report: Optional[BoundsReport] = None,
                      expected: Optional[Sequence[Fraction]] = None) -> str:
    """Grayscale heatmap, darkness ~ log(1 + count), m10 on x and m11 on y"""
    cells = diagram.sorted_cells()
    width = max(m10 for (m10, _), _ in cells)
    height = max(m11 for (_, m11), _ in cells)
    if report is not None:
        width = max(width, report.ub_m10_old)
        height = max(height, report.ub_m11_old)

    grid = np.zeros((height + 1, width + 1))
    for (m10, m11), count in cells:
        grid[m11, m10] = math.log1p(count)

    with matplotlib.rc_context({"svg.hashsalt": "dyadbound", "svg.fonttype": "none"}):
        figure = Figure(figsize=(6, 5))
        ax = figure.add_subplot(1, 1, 1)
        image = ax.imshow(grid, origin="lower", cmap="Greys", interpolation="nearest", aspect="auto",
                          extent=(-0.5, width + 0.5, -0.5, height + 0.5), vmin=0)
        figure.colorbar(image, ax=ax, label="log(1 + degeneracy)")

        if report is not None:
            ax.add_patch(Rectangle((-0.5, -0.5), report.ub_m10_old + 1, report.ub_m11_old + 1,
                                   fill=False, linestyle="--", edgecolor="tab:blue", label="classic bounds"))
            ax.add_patch(Rectangle((report.lb_m10 - 0.5, report.lb_m11 - 0.5),
                                   max(0, report.ub_m10 - report.lb_m10 + 1), max(0, report.ub_m11 - report.lb_m11 + 1),
                                   fill=False, linestyle="-", edgecolor="tab:red", label="structural bounds"))
        if expected is not None:
            expected_m11, expected_m10 = expected
            ax.axvline(float(expected_m10), linestyle=":", color="gray", label="H = 1")
            ax.axhline(float(expected_m11), linestyle=":", color="gray", label="D = 1")
        if report is not None or expected is not None:
            ax.legend(loc="upper right", fontsize="small")

        ax.set_xlabel("m10")
        ax.set_ylabel("m11")
        ax.set_title(f"N={diagram.node_count}, M={diagram.edge_count}, n1={diagram.n1}")

        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
