#!/usr/bin/env python3
"""
mapwalk command line.

    mapwalk analyze MAP.rotmap | --family NAME PARAMS...  [--json OUT]
    mapwalk evolve  MAP.rotmap | --family NAME PARAMS...  --start-vertex U --steps T
                    [--trace V] [--trace-out CSV] [--frames DIR]
    mapwalk family  NAME PARAMS... [--out PATH]

Exit codes: 0 success, 1 internal error, 2 input error.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional

from loguru import logger
from pydantic import ValidationError

from ..analysis.analyzer import MapAnalyzer
from ..config import MapwalkSettings
from ..core.incidence import incidence
from ..core.maps import MapStructure
from ..core.rotmap import emit_rotmap, read_rotmap, write_rotmap
from ..errors import MapValidationError, PreconditionError
from ..families.generators import FamilySpec, MapLayout
from ..fileio import atomic_write_text
from ..logging_utils import configure_logging
from ..walk.operator import build_operator
from .document import ReportDocument
from .frames import probability_trace, trace_csv, write_frames

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2


@dataclass
class LoadedMap:
    structure: MapStructure
    source: str
    layout: Optional[MapLayout]
    vertex_id: Callable[[str], int]


def _plain_vertex(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MapValidationError(f"bad vertex id {token!r}") from None


def load_map(args: argparse.Namespace) -> LoadedMap:
    """Build the map named by ``--family`` or read the positional .rotmap path."""
    if args.family:
        spec = FamilySpec.parse(args.family[0], args.family[1:])
        structure = spec.build()
        return LoadedMap(structure, spec.label, spec.layout(structure), spec.vertex_id)
    if not args.source:
        raise MapValidationError("give a .rotmap path or --family NAME PARAMS...")
    structure = read_rotmap(args.source)
    return LoadedMap(structure, str(args.source), None, _plain_vertex)


def load_settings(args: argparse.Namespace) -> MapwalkSettings:
    settings = MapwalkSettings.from_yaml(getattr(args, "config", None))
    return settings.with_overrides(
        max_steps=getattr(args, "max_steps", None),
        tol=getattr(args, "tol", None),
        general_pst=True if getattr(args, "general_pst", False) else None,
        log_level=args.log_level,
    )


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_analyze(args: argparse.Namespace, settings: MapwalkSettings) -> int:
    loaded = load_map(args)
    analysis = MapAnalyzer(settings).run(loaded.structure)
    document = ReportDocument.from_analysis(analysis, loaded.source, settings)
    written = document.write(args.json)
    if written is None:
        sys.stdout.write(document.to_json().decode("utf-8") + "\n")
    else:
        logger.info(f"Report written to {written}")
    return EXIT_OK


def cmd_evolve(args: argparse.Namespace, settings: MapwalkSettings) -> int:
    loaded = load_map(args)
    structure = loaded.structure
    u = loaded.vertex_id(args.start_vertex)
    if not 0 <= u < structure.num_vertices:
        raise PreconditionError(f"start vertex {u} out of range 0..{structure.num_vertices - 1}")
    if args.steps < 0:
        raise PreconditionError(f"--steps must be non-negative, got {args.steps}")

    op = build_operator(incidence(structure), verify=settings.verify_operators)
    target = loaded.vertex_id(args.trace) if args.trace is not None else u
    csv_text = trace_csv(probability_trace(op, u, target, args.steps))
    if args.trace_out in (None, "-"):
        sys.stdout.write(csv_text)
    else:
        atomic_write_text(args.trace_out, csv_text)
        logger.info(f"Trace written to {args.trace_out}")

    if args.frames:
        if args.fmt != "svg":
            raise PreconditionError(f"unsupported frame format {args.fmt!r}")
        if loaded.layout is None:
            logger.warning("no layout for this map; drawing on a circle")
        write_frames(structure, op, u, args.steps, args.frames, loaded.layout)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, settings: MapwalkSettings) -> int:
    spec = FamilySpec.parse(args.name, args.params)
    structure = spec.build()
    comment = f"family {spec.label}"
    if args.out:
        write_rotmap(structure, args.out, comment=comment)
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(emit_rotmap(structure, comment=comment))
    return EXIT_OK


# =============================================================================
# PARSER
# =============================================================================


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--config", default=None, help="YAML settings file")


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("source", nargs="?", help=".rotmap file")
    parser.add_argument(
        "--family", nargs="+", metavar="ARG", help="family name followed by its parameters"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapwalk", description="Vertex-face quantum walks on orientable maps."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="detect PST, periodicity and U^s = I")
    _add_source(analyze)
    _add_common(analyze)
    analyze.add_argument("--max-steps", type=int, default=None, help="sweep horizon")
    analyze.add_argument("--tol", type=float, default=None, help="eigensolver tolerance")
    analyze.add_argument("--general-pst", action="store_true", help="unequal-degree PST")
    analyze.add_argument("--json", default=None, help="report path (stdout when omitted)")
    analyze.set_defaults(handler=cmd_analyze)

    evolve = sub.add_parser("evolve", help="probability trace and SVG frames")
    _add_source(evolve)
    _add_common(evolve)
    evolve.add_argument("--start-vertex", required=True, help="vertex id, or a,b for grids")
    evolve.add_argument("--steps", type=int, required=True)
    evolve.add_argument("--trace", default=None, help="target vertex (default: start vertex)")
    evolve.add_argument("--trace-out", default=None, help="CSV path (stdout when omitted)")
    evolve.add_argument("--frames", default=None, help="directory for frame_NNNN.svg")
    evolve.add_argument("--fmt", default="svg", choices=["svg"])
    evolve.set_defaults(handler=cmd_evolve)

    family = sub.add_parser("family", help="emit a generated map as .rotmap")
    family.add_argument("name")
    family.add_argument("params", nargs="*")
    family.add_argument("--out", default=None, help="output path (stdout when omitted)")
    _add_common(family)
    family.set_defaults(handler=cmd_family)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or "INFO")
    try:
        settings = load_settings(args)
        configure_logging(settings.log_level)
        return args.handler(args, settings)
    except (MapValidationError, PreconditionError, ValidationError) as exc:
        logger.error(str(exc))
        return EXIT_INPUT
    except Exception:
        logger.exception("mapwalk failed")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
