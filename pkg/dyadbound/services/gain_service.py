import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from dyadbound.config import get_settings
from dyadbound.exceptions import GeneratorConfigError
from dyadbound.models.graph import Graph
from dyadbound.schemas.bounds import BoundsReport
from dyadbound.schemas.graph import GeneratorSpec, GraphFamily
from dyadbound.schemas.phase import GainRow
from dyadbound.services.bounds_service import bounds_sweep
from dyadbound.services.graph_generator import generate

logger = logging.getLogger(__name__)

GAIN_FIELDS = ("area_old", "area_new", "gain_ub_m11", "gain_ub_m10", "gain_lb_m11", "gain_lb_m10", "gain_total")


def _lattice_area(lb_m10: int, ub_m10: int, lb_m11: int, ub_m11: int) -> int:
    """Integer cells in [lb_m10, ub_m10] x [lb_m11, ub_m11], 0 when a range is empty"""
    return max(0, ub_m10 - lb_m10 + 1) * max(0, ub_m11 - lb_m11 + 1)


def feasible_area(report: BoundsReport, old: bool = False) -> int:
    if old:
        return _lattice_area(0, report.ub_m10_old, 0, report.ub_m11_old)
    return _lattice_area(report.lb_m10, report.ub_m10, report.lb_m11, report.ub_m11)


def gain_row(report: BoundsReport) -> GainRow:
    """Area reduction of each structural bound substituted alone into the classic rectangle"""
    r = report
    area_old = feasible_area(r, old=True)
    area_new = feasible_area(r)

    def gain(area: int) -> Fraction:
        return 1 - Fraction(area, area_old)

    return GainRow(
        n1=r.n1,
        area_old=Fraction(area_old),
        area_new=Fraction(area_new),
        gain_ub_m11=gain(_lattice_area(0, r.ub_m10_old, 0, r.ub_m11)),
        gain_ub_m10=gain(_lattice_area(0, r.ub_m10, 0, r.ub_m11_old)),
        gain_lb_m11=gain(_lattice_area(0, r.ub_m10_old, r.lb_m11, r.ub_m11_old)),
        gain_lb_m10=gain(_lattice_area(r.lb_m10, r.ub_m10_old, 0, r.ub_m11_old)),
        gain_total=gain(area_new),
    )


def gain_curves(g: Graph) -> List[GainRow]:
    return [gain_row(report) for report in bounds_sweep(g)]


def mean_reduction(rows: Sequence[GainRow]) -> Fraction:
    """Mean relative area reduction 1 - area_new/area_old over a sweep"""
    if not rows:
        return Fraction(0)
    return sum((row.gain_total for row in rows), Fraction(0)) / len(rows)


def feasible_region_sweep(g: Graph) -> Tuple[List[GainRow], Fraction]:
    """Gain rows for n1 = 0..N and their mean relative area reduction"""
    rows = gain_curves(g)
    reduction = mean_reduction(rows)
    logger.info(f"Feasible-region sweep on N={g.node_count}, M={g.edge_count}: mean reduction {float(reduction):.4f}")
    return rows, reduction


def average_rows(curves: Sequence[Sequence[GainRow]]) -> List[GainRow]:
    """Element-wise arithmetic mean of equally long gain curves"""
    runs = len(curves)
    averaged = []
    for rows in zip(*curves):
        fields = {name: sum((getattr(row, name) for row in rows), Fraction(0)) / runs for name in GAIN_FIELDS}
        averaged.append(GainRow(n1=rows[0].n1, **fields))
    return averaged


def _instance_gains(spec: GeneratorSpec) -> List[GainRow]:
    return gain_curves(generate(spec))


def ensemble_gain(spec: GeneratorSpec, runs: Optional[int] = None, workers: Optional[int] = None) -> List[GainRow]:
    """Mean gain curves over instances seeded spec.seed, spec.seed + 1, ..."""
    settings = get_settings()
    runs = settings.ensemble_runs if runs is None else runs
    workers = workers or settings.workers
    if runs < 1:
        raise GeneratorConfigError(f"runs must be at least 1, got {runs}")
    if spec.family == GraphFamily.BARABASI_ALBERT and spec.density is not None:
        raise GeneratorConfigError("scale-free ensembles are sparse by construction; density targets are not generated")

    specs = [spec.with_seed((spec.seed + i) % 2**64) for i in range(runs)]
    logger.info(f"Running {runs} {spec.family.value} instances on N={spec.node_count} with {workers} workers")
    if workers > 1 and runs > 1:
        with ProcessPoolExecutor(max_workers=min(workers, runs)) as executor:
            curves = list(executor.map(_instance_gains, specs))
    else:
        curves = [_instance_gains(s) for s in specs]
    return average_rows(curves)
