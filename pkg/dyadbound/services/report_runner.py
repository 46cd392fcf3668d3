import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from dyadbound.config import get_settings
from dyadbound.exceptions import FileAccessError
from dyadbound.models.graph import Graph
from dyadbound.schemas.command import CommandSpec
from dyadbound.services import report_writer
from dyadbound.services.bounds_service import bounds_report, bounds_sweep
from dyadbound.services.dyadic_metrics import (
    analyze_assignment,
    classify_dyadic_effect,
    density,
    expected_curve,
    expected_dyads,
)
from dyadbound.services.gain_service import ensemble_gain, gain_curves
from dyadbound.services.graph_generator import generate
from dyadbound.services.graph_io import read_characteristic, read_edge_list, write_edge_list
from dyadbound.services.phase_enumerator import enumerate_phase_diagram

logger = logging.getLogger(__name__)


class ReportRunner:
    """Command orchestrator: load or generate a graph, compute, write every requested output"""

    def __init__(self, settings=None):
        self.settings = settings or get_settings()

    def run(self, spec: CommandSpec) -> int:
        logger.info(f"Running '{spec.subcommand}'")
        handler = getattr(self, f"_run_{spec.subcommand}")
        handler(spec)
        logger.info(f"'{spec.subcommand}' completed")
        return 0

    def _load_graph(self, spec: CommandSpec) -> Graph:
        if spec.input_path is not None:
            return read_edge_list(spec.input_path)
        return generate(spec.generator)

    def _write(self, path: Optional[str], text: str) -> None:
        if path is None:
            sys.stdout.write(text)
            return
        try:
            target = Path(path)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
        except OSError as e:
            logger.error(f"Could not write {path}: {e}")
            raise FileAccessError(f"cannot write {path}: {e}")
        logger.info(f"Wrote {path}")

    def _run_metrics(self, spec: CommandSpec) -> None:
        g = self._load_graph(spec)
        assignment = read_characteristic(spec.characteristic_path, g, spec.characteristic_format)
        counts, stats = analyze_assignment(g, assignment)
        classification = classify_dyadic_effect(stats.dyadicity, stats.heterophilicity)
        self._write(spec.output_path, report_writer.metrics_json(assignment, counts, stats, classification))

    def _run_bounds(self, spec: CommandSpec) -> None:
        g = self._load_graph(spec)
        reports = bounds_sweep(g, None if spec.n1 is None else [spec.n1])
        if spec.format == "json":
            self._write(spec.output_path, report_writer.bounds_json(reports))
        else:
            self._write(spec.output_path, report_writer.bounds_csv(reports))

    def _run_phase(self, spec: CommandSpec) -> None:
        g = self._load_graph(spec)
        n1_values = range(g.node_count + 1) if spec.all_n1 else [spec.n1]
        for n1 in n1_values:
            diagram = enumerate_phase_diagram(g, n1, workers=spec.workers)
            output_path, svg_path = spec.output_path, spec.svg_path
            if spec.all_n1:
                output_path = _suffixed(output_path, n1)
                svg_path = None if svg_path is None else _suffixed(svg_path, n1)

            if spec.format == "svg":
                self._write(output_path, self._heatmap(g, diagram))
                continue
            self._write(output_path, report_writer.phase_csv(diagram))
            if svg_path is not None:
                self._write(svg_path, self._heatmap(g, diagram))

    def _heatmap(self, g: Graph, diagram) -> str:
        n1 = diagram.n1
        expected = expected_dyads(g.node_count, g.edge_count, n1) if g.node_count >= 2 else None
        return report_writer.phase_heatmap_svg(diagram, bounds_report(g, n1, warn=False), expected)

    def _run_gains(self, spec: CommandSpec) -> None:
        g = self._load_graph(spec)
        rows = gain_curves(g)
        if spec.n1 is not None:
            rows = [row for row in rows if row.n1 == spec.n1]
        self._write_gains(spec, rows)

    def _run_bench(self, spec: CommandSpec) -> None:
        rows = ensemble_gain(spec.generator, runs=spec.runs, workers=spec.workers)
        if spec.n1 is not None:
            rows = [row for row in rows if row.n1 == spec.n1]
        self._write_gains(spec, rows)

    def _write_gains(self, spec: CommandSpec, rows) -> None:
        if spec.format == "json":
            self._write(spec.output_path, report_writer.gains_json(rows))
        else:
            self._write(spec.output_path, report_writer.gains_csv(rows))

    def _run_gen(self, spec: CommandSpec) -> None:
        self._write(spec.output_path, write_edge_list(generate(spec.generator)))

    def _run_expected(self, spec: CommandSpec) -> None:
        deltas: List[Fraction] = []
        if spec.edge_count is not None:
            deltas.append(density(spec.node_count, spec.edge_count))
        deltas.extend(Fraction(str(value)) for value in spec.densities)

        rows = []
        for delta in deltas:
            rows.extend(expected_curve(spec.node_count, delta))
        if spec.n1 is not None:
            rows = [row for row in rows if row["n1"] == spec.n1]
        self._write(spec.output_path, report_writer.expected_csv(rows))


def _suffixed(path: str, n1: int) -> str:
    target = Path(path)
    return str(target.with_name(f"{target.stem}_n1_{n1}{target.suffix}"))
