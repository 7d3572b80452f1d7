"""
Command-line surface for mapwalk.

Components:
- main: argparse entry point with the analyze, evolve and family commands
- document: ReportDocument and canonical JSON
- frames: CSV probability traces and SVG frames

Example:
--------
>>> from mapwalk.cli import main
>>> main(["family", "dipole", "2"])  # doctest: +SKIP
0
"""

from .document import ReportDocument, canonical_json
from .frames import probability_trace, render_frame, trace_csv, write_frames
from .main import build_parser, main

__all__ = [
    "ReportDocument",
    "build_parser",
    "canonical_json",
    "main",
    "probability_trace",
    "render_frame",
    "trace_csv",
    "write_frames",
]
