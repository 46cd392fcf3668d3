#!/usr/bin/env python3
"""
Local reproduction runner for the dyad-bound experiments

Writes into settings.output_dir:
  - the 25-node feasible-region sweep (bounds, gains, one phase diagram per n1)
  - desk-scale ensemble gain curves for the sparse and dense settings
  - expected dyad curves for a range of densities
"""

import logging
import os
import sys
from pathlib import Path

# Add the package to path
sys.path.append(str(Path(__file__).parent))

try:
    from dyadbound.config import get_settings
    from dyadbound.schemas.graph import GeneratorSpec, GraphFamily
    from dyadbound.services import report_writer
    from dyadbound.services.bounds_service import bounds_report, bounds_sweep
    from dyadbound.services.dyadic_metrics import expected_curve, expected_dyads
    from dyadbound.services.gain_service import ensemble_gain, feasible_region_sweep
    from dyadbound.services.graph_generator import generate
    from dyadbound.services.graph_io import write_edge_list
    from dyadbound.services.phase_enumerator import enumerate_phase_sequence
except ImportError as e:
    print(f"Import error: {e}")
    sys.exit(1)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("run_local")

SWEEP_SPEC = GeneratorSpec(family=GraphFamily.ERDOS_RENYI, node_count=25, edge_count=32, seed=3,
                           require_connected=True)
DESK_NODES = 200
DENSITIES = ("0.1", "0.3", "0.5", "0.7", "0.9")


def feasible_region_reproduction(output_dir: Path) -> None:
    settings = get_settings()
    g = generate(SWEEP_SPEC)
    (output_dir / "sweep_graph.txt").write_text(write_edge_list(g), encoding="utf-8")

    reports = bounds_sweep(g)
    rows, reduction = feasible_region_sweep(g)
    (output_dir / "sweep_bounds.csv").write_text(report_writer.bounds_csv(reports), encoding="utf-8")
    (output_dir / "sweep_gains.csv").write_text(report_writer.gains_csv(rows), encoding="utf-8")

    diagram_dir = output_dir / "phase"
    diagram_dir.mkdir(exist_ok=True)
    violations = 0
    for report, diagram in zip(reports, enumerate_phase_sequence(g, workers=settings.workers)):
        min_m11, max_m11, min_m10, max_m10 = diagram.extremal()
        if not (report.lb_m11 <= min_m11 and max_m11 <= report.ub_m11
                and report.lb_m10 <= min_m10 and max_m10 <= report.ub_m10):
            logger.error(f"Diagram for n1={report.n1} leaves the bound rectangle")
            violations += 1
        stem = diagram_dir / f"phase_n1_{diagram.n1}"
        stem.with_suffix(".csv").write_text(report_writer.phase_csv(diagram), encoding="utf-8")
        stem.with_suffix(".svg").write_text(
            report_writer.phase_heatmap_svg(diagram, bounds_report(g, diagram.n1, warn=False),
                                            expected_dyads(g.node_count, g.edge_count, diagram.n1)),
            encoding="utf-8",
        )

    print(f"Feasible-region sweep: mean reduction {float(reduction):.4f}, containment violations {violations}")


def benchmark_reproduction(output_dir: Path) -> None:
    settings = get_settings()
    settings_list = [
        ("er_sparse", GeneratorSpec(family=GraphFamily.ERDOS_RENYI, node_count=DESK_NODES, mean_degree=6, seed=1,
                                    require_connected=True)),
        ("er_dense", GeneratorSpec(family=GraphFamily.ERDOS_RENYI, node_count=DESK_NODES, density=0.9, seed=1,
                                   require_connected=True)),
        ("ba_sparse", GeneratorSpec(family=GraphFamily.BARABASI_ALBERT, node_count=DESK_NODES, mean_degree=6,
                                    seed=1)),
        ("regular_sparse", GeneratorSpec(family=GraphFamily.REGULAR, node_count=DESK_NODES, mean_degree=6, seed=1,
                                         require_connected=True)),
        ("regular_dense", GeneratorSpec(family=GraphFamily.REGULAR, node_count=DESK_NODES, density=0.9, seed=1,
                                        require_connected=True)),
    ]
    for name, spec in settings_list:
        rows = ensemble_gain(spec, runs=settings.ensemble_runs, workers=settings.workers)
        (output_dir / f"bench_{name}.csv").write_text(report_writer.gains_csv(rows), encoding="utf-8")
        peak = max(row.gain_lb_m11 + row.gain_lb_m10 for row in rows)
        print(f"{name}: peak lower-bound gain {float(peak):.4f}")


def expected_reproduction(output_dir: Path) -> None:
    from fractions import Fraction

    rows = []
    for value in DENSITIES:
        rows.extend(expected_curve(DESK_NODES, Fraction(value)))
    (output_dir / "expected.csv").write_text(report_writer.expected_csv(rows), encoding="utf-8")


if __name__ == "__main__":
    settings = get_settings()
    output_dir = Path(settings.output_dir)
    os.makedirs(output_dir, exist_ok=True)

    print("=" * 60)
    print("Dyadic Effect Bounds - Local Reproduction Run")
    print("=" * 60)
    print(f"Output directory: {output_dir.resolve()}")
    print(f"Workers: {settings.workers}, ensemble runs: {settings.ensemble_runs}")
    print("=" * 60)

    feasible_region_reproduction(output_dir)
    benchmark_reproduction(output_dir)
    expected_reproduction(output_dir)
