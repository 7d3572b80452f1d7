"""
Probability traces (CSV) and per-step SVG frames of a walk.

Frames draw every arc as a short arrow along its edge: red for a positive
amplitude, blue for a negative one, opacity equal to |amplitude| of the
unit-norm state. Grid families are drawn on the cut-open torus, every other
map on a circle.
"""

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402
from loguru import logger  # noqa: E402

from ..analysis.report import render_rational  # noqa: E402
from ..core.maps import MapStructure  # noqa: E402
from ..families.generators import LayoutKind, MapLayout, circle_layout  # noqa: E402
from ..fileio import atomic_write_bytes  # noqa: E402
from ..walk.operator import WalkOperator, transfer_probability, vector_sequence  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "mapwalk"
matplotlib.rcParams["svg.fonttype"] = "none"

POSITIVE = "#d62728"
NEGATIVE = "#1f77b4"
IDLE = "#bbbbbb"


# =============================================================================
# TRACE
# =============================================================================


def probability_trace(op: WalkOperator, u: int, v: int, steps: int) -> pd.DataFrame:
    """
    Transfer probabilities from u to v for t = 0..steps.

    Columns: ``t``, ``probability`` (float) and ``exact`` ("p/q").
    """
    exact = transfer_probability(op, u, v, steps, exact=True)
    return pd.DataFrame(
        {
            "t": np.arange(steps + 1, dtype=np.int64),
            "probability": [float(p) for p in exact],
            "exact": [render_rational(p) for p in exact],
        }
    )


def trace_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")


# =============================================================================
# AMPLITUDES
# =============================================================================


def unit_amplitudes(op: WalkOperator, u: int, steps: int) -> List[np.ndarray]:
    """Float amplitudes of U^t N^ e_u, t = 0..steps, computed exactly then scaled."""
    scale = np.sqrt(float(op.degrees[u]))
    return [column.to_float()[:, 0] / scale for column in vector_sequence(op, u, steps)]


# =============================================================================
# DRAWING
# =============================================================================


@dataclass(frozen=True)
class ArcGeometry:
    start: Tuple[float, float]
    end: Tuple[float, float]


def _wrap(delta: np.ndarray, layout: MapLayout) -> np.ndarray:
    """Shortest displacement on the cut-open torus."""
    if layout.kind is not LayoutKind.TORUS or layout.torus_shape is None:
        return delta
    rows, cols = layout.torus_shape
    wrapped = delta.copy()
    for axis, extent in ((0, cols), (1, rows)):
        if extent > 1 and abs(wrapped[axis]) > extent / 2:
            wrapped[axis] -= np.sign(wrapped[axis]) * extent
    return wrapped


def arc_geometry(structure: MapStructure, layout: MapLayout) -> List[ArcGeometry]:
    """
    Segment for every arc.

    Parallel arcs between the same ordered pair of vertices are spread into
    lanes on their right-hand side; loops become short spokes around their
    vertex.
    """
    positions = layout.positions
    lanes: Dict[Tuple[int, int], int] = {}
    loops: Dict[int, int] = {}
    for d in range(structure.dart_count):
        u, w = structure.tail(d), structure.head(d)
        if u == w:
            loops[u] = loops.get(u, 0) + 1

    geometry = []
    loop_seen: Dict[int, int] = {}
    for d in range(structure.dart_count):
        u, w = structure.tail(d), structure.head(d)
        origin = positions[u]
        if u == w:
            k = loop_seen.get(u, 0)
            loop_seen[u] = k + 1
            angle = 2 * np.pi * k / loops[u]
            spoke = 0.3 * np.array([np.cos(angle), np.sin(angle)])
            geometry.append(ArcGeometry(tuple(origin + 0.1 * spoke), tuple(origin + spoke)))
            continue

        lane = lanes.get((u, w), 0)
        lanes[(u, w)] = lane + 1
        delta = _wrap(positions[w] - positions[u], layout)
        length = float(np.hypot(*delta)) or 1.0
        normal = np.array([delta[1], -delta[0]]) / length
        offset = normal * 0.06 * (lane + 1)
        start = origin + 0.15 * delta + offset
        end = origin + 0.5 * delta + offset
        geometry.append(ArcGeometry(tuple(start), tuple(end)))
    return geometry


def render_frame(
    structure: MapStructure,
    layout: MapLayout,
    amplitudes: np.ndarray,
    title: Optional[str] = None,
) -> bytes:
    """One SVG frame for a unit-norm arc state."""
    geometry = arc_geometry(structure, layout)
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        positions = layout.positions
        ax.scatter(positions[:, 0], positions[:, 1], s=30, color="black", zorder=3)
        for arc, amp in zip(geometry, amplitudes):
            magnitude = min(abs(float(amp)), 1.0)
            if magnitude < 1e-12:
                color, alpha = IDLE, 0.25
            else:
                color, alpha = (POSITIVE if amp > 0 else NEGATIVE), max(magnitude, 0.05)
            ax.annotate(
                "",
                xy=arc.end,
                xytext=arc.start,
                arrowprops={"arrowstyle": "-|>", "color": color, "alpha": alpha, "lw": 1.6},
            )
        if layout.kind is LayoutKind.TORUS and layout.torus_shape is not None:
            rows, cols = layout.torus_shape
            ax.add_patch(
                plt.Rectangle((-0.5, -rows + 0.5), cols, rows, fill=False, ls="--", lw=0.8)
            )
        if title:
            ax.set_title(title)
        ax.set_aspect("equal")
        ax.axis("off")
        buffer = io.BytesIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    return buffer.getvalue()


def write_frames(
    structure: MapStructure,
    op: WalkOperator,
    u: int,
    steps: int,
    out_dir: Union[str, Path],
    layout: Optional[MapLayout] = None,
) -> List[Path]:
    """Write frame_0000.svg .. frame_{steps}.svg for the walk started at u."""
    if layout is None or len(layout.positions) != structure.num_vertices:
        if layout is not None:
            logger.warning("layout does not match the map; falling back to a circle")
        layout = circle_layout(structure.num_vertices)
    out_dir = Path(out_dir)
    paths = []
    for t, amplitudes in enumerate(unit_amplitudes(op, u, steps)):
        svg = render_frame(structure, layout, amplitudes, title=f"t = {t}")
        paths.append(atomic_write_bytes(out_dir / f"frame_{t:04d}.svg", svg))
    logger.info(f"Wrote {len(paths)} frame(s) to {out_dir}")
    return paths
