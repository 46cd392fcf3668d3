"""
Command-line front end.

    python -m dyadbound bounds --gen er --n 25 --m 32 --seed 3
    python -m dyadbound phase --input graph.txt --n1 10 --svg diagram.svg
    python -m dyadbound expected --n 25 --m 32
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import dotenv_values
from pydantic import ValidationError

from dyadbound import __version__
from dyadbound.config import get_settings
from dyadbound.exceptions import DyadboundError, FileAccessError, GeneratorConfigError
from dyadbound.schemas.command import CommandSpec
from dyadbound.schemas.graph import GeneratorSpec, GraphFamily
from dyadbound.services.report_runner import ReportRunner

logger = logging.getLogger(__name__)

USAGE_EXIT = 2

FORMATS_HELP = """\
file formats:
  edge list       UTF-8, one edge per line as two whitespace-separated node
                  tokens; '#' starts a comment; blank lines are ignored
  labels vector   one 0/1 value per line, in node order of first appearance
  labels set      one node label per line; listed nodes carry characteristic 1
  generator file  key=value lines: family, n, m | mean_degree | density,
                  seed, require_connected
  bounds CSV      n1,ub_m11_old,ub_m10_old,ub_m11,ub_m10,lb_m11,lb_m10,
                  d_min,d_max,h_min,h_max ('undefined' where m̄ = 0)
  phase CSV       m10,m11,count sorted by (m10, m11)
  gain CSV        n1,area_old,area_new,gain_ub_m11,gain_ub_m10,gain_lb_m11,
                  gain_lb_m10,gain_total
  expected CSV    n1,fraction,density,expected_m11,expected_m10
  phase SVG       grayscale heatmap, darkness ~ log(1 + count), m10 on x, m11 on y

exit status:
  0 success, 2 usage, 65 bad input data, 70 generation failed,
  74 file access, 75 enumeration budget refused, 78 bad generator config
"""


def _add_graph_source(parser: argparse.ArgumentParser, required_generator: bool = False) -> None:
    group = parser.add_argument_group("graph source")
    if not required_generator:
        group.add_argument("--input", help="edge-list file")
    group.add_argument("--gen", help="generator family: er | ba | regular")
    group.add_argument("--gen-config", help="key=value generator file")
    group.add_argument("--n", type=int, help="number of nodes")
    group.add_argument("--m", type=int, help="number of edges")
    group.add_argument("--mean-degree", type=float, help="target mean degree")
    group.add_argument("--density", type=float, help="target density")
    group.add_argument("--seed", type=int, help="64-bit generator seed (default 0)")
    group.add_argument("--connected", action=argparse.BooleanOptionalAction, default=None,
                       help="regenerate until connected")


def _add_output(parser: argparse.ArgumentParser, formats: List[str]) -> None:
    parser.add_argument("--output", help="output file (default stdout)")
    parser.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyadbound",
        description="Dyad counts, degree-sequence bounds and exact phase diagrams for labeled graphs.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    metrics = subparsers.add_parser("metrics", help="dyad counts, D and H for a labeled graph")
    _add_graph_source(metrics)
    metrics.add_argument("--labels", help="characteristic file")
    metrics.add_argument("--labels-format", choices=["vector", "set"], default="vector")
    _add_output(metrics, ["json"])

    bounds = subparsers.add_parser("bounds", help="old and new bounds for n1 = 0..N")
    _add_graph_source(bounds)
    bounds.add_argument("--n1", type=int, help="restrict to one n1")
    _add_output(bounds, ["csv", "json"])

    phase = subparsers.add_parser("phase", help="exact phase diagram by enumeration")
    _add_graph_source(phase)
    phase.add_argument("--n1", help="number of 1-labeled nodes, or 'all'")
    phase.add_argument("--svg", help="also write a heatmap to this path")
    phase.add_argument("--workers", type=int, help="enumeration worker processes")
    _add_output(phase, ["csv", "svg"])

    gains = subparsers.add_parser("gains", help="feasible-region areas and per-bound gains")
    _add_graph_source(gains)
    gains.add_argument("--n1", type=int, help="restrict to one n1")
    _add_output(gains, ["csv", "json"])

    bench = subparsers.add_parser("bench", help="mean gain curves over a seeded ensemble")
    _add_graph_source(bench, required_generator=True)
    bench.add_argument("--runs", type=int, help="instances (default from settings)")
    bench.add_argument("--workers", type=int, help="instance worker processes")
    bench.add_argument("--n1", type=int, help="restrict to one n1")
    _add_output(bench, ["csv", "json"])

    gen = subparsers.add_parser("gen", help="write a generated graph as an edge list")
    _add_graph_source(gen, required_generator=True)
    gen.add_argument("--output", help="output file (default stdout)")

    expected = subparsers.add_parser("expected", help="m̄11 and m̄10 against n1/N")
    expected.add_argument("--n", type=int, help="number of nodes")
    expected.add_argument("--m", type=int, help="number of edges (density from N and M)")
    expected.add_argument("--density", type=float, action="append", default=[], help="density, repeatable")
    expected.add_argument("--n1", type=int, help="restrict to one n1")
    expected.add_argument("--output", help="output file (default stdout)")

    return parser


def _generator_spec(args: argparse.Namespace) -> Optional[GeneratorSpec]:
    values = {}
    if getattr(args, "gen_config", None):
        if not Path(args.gen_config).is_file():
            raise FileAccessError(f"cannot read generator config {args.gen_config}")
        values = {key.lower(): value for key, value in dotenv_values(args.gen_config).items() if value not in (None, "")}

    overrides = {
        "family": getattr(args, "gen", None),
        "n": args.n,
        "m": args.m,
        "mean_degree": getattr(args, "mean_degree", None),
        "density": args.density,
        "seed": getattr(args, "seed", None),
        "require_connected": getattr(args, "connected", None),
    }
    values.update({key: value for key, value in overrides.items() if value is not None})
    if "family" not in values:
        return None

    if values.get("require_connected") is None:
        values["require_connected"] = args.subcommand == "bench"
    try:
        return GeneratorSpec(
            family=GraphFamily.parse(str(values["family"])),
            node_count=values.get("n"),
            edge_count=values.get("m"),
            mean_degree=values.get("mean_degree"),
            density=values.get("density"),
            seed=values.get("seed", 0),
            require_connected=values["require_connected"],
        )
    except (ValidationError, ValueError) as e:
        raise GeneratorConfigError(f"invalid generator settings: {e}")


def to_command_spec(args: argparse.Namespace) -> CommandSpec:
    command = args.subcommand
    fields = {"subcommand": command, "output_path": getattr(args, "output", None)}
    if hasattr(args, "format"):
        fields["format"] = args.format

    if command == "expected":
        fields.update(node_count=args.n, edge_count=args.m, densities=args.density, n1=args.n1)
        return CommandSpec(**fields)

    fields["input_path"] = getattr(args, "input", None)
    fields["generator"] = _generator_spec(args)
    fields["workers"] = getattr(args, "workers", None)
    fields["runs"] = getattr(args, "runs", None)
    if command == "metrics":
        fields.update(characteristic_path=args.labels, characteristic_format=args.labels_format)
    if command == "phase":
        fields["svg_path"] = args.svg
        if args.n1 is not None and args.n1.strip().lower() == "all":
            fields["all_n1"] = True
        elif args.n1 is not None:
            try:
                fields["n1"] = int(args.n1)
            except ValueError:
                raise ValueError(f"--n1 must be an integer or 'all', got '{args.n1}'")
    elif getattr(args, "n1", None) is not None:
        fields["n1"] = args.n1
    return CommandSpec(**fields)


def _report_failure(payload: dict) -> int:
    sys.stderr.write(json.dumps(payload) + "\n")
    return payload["exit_code"]


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        spec = to_command_spec(args)
    except DyadboundError as e:
        logger.error(f"Invalid invocation: {e.message}")
        return _report_failure(e.to_dict())
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid invocation: {e}")
        return _report_failure({"error": "usage_error", "message": str(e), "exit_code": USAGE_EXIT})

    try:
        return ReportRunner(settings).run(spec)
    except DyadboundError as e:
        logger.error(f"'{spec.subcommand}' failed: {e.message}")
        return _report_failure(e.to_dict())


if __name__ == "__main__":
    sys.exit(main())
