#!/usr/bin/env python3
"""
DEMO: Perfect State Transfer Gallery
====================================

Runs the analyzer on a handful of generated maps, prints what it finds and
writes a probability trace plus SVG frames for the (2,5)-grid, where the
walk moves from (0,0) to (1,0) with certainty at t = 5.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from mapwalk import MapAnalyzer, MapwalkSettings, build_operator, incidence  # noqa: E402
from mapwalk.cli import canonical_json, probability_trace, trace_csv, write_frames  # noqa: E402
from mapwalk.families import FamilySpec, grid_vertex  # noqa: E402
from mapwalk.logging_utils import configure_logging  # noqa: E402

GALLERY = [
    ("dipole", ["2"]),
    ("dipole", ["5"]),
    ("grid", ["1", "6"]),
    ("grid", ["2", "5"]),
    ("grid_doubled", ["5"]),
    ("quasi_tree_bouquet", ["2"]),
    ("heawood", []),
]


# =============================================================================
# ANALYSIS
# =============================================================================


def analyze_gallery(settings: MapwalkSettings) -> list:
    analyzer = MapAnalyzer(settings)
    rows = []
    for name, params in GALLERY:
        spec = FamilySpec.parse(name, params)
        structure = spec.build()
        start = time.time()
        report = analyzer.analyze(structure)
        elapsed = (time.time() - start) * 1000
        rows.append(
            {
                "map": spec.label,
                "V/E/F": f"{structure.num_vertices}/{structure.num_edges}/{structure.num_faces}",
                "genus": structure.genus,
                "pst": [(p.u, p.v, p.tau) for p in report.pst_pairs[:3]],
                "period": report.map_period,
                "s": report.identity_power,
                "ms": elapsed,
            }
        )
    return rows


def print_table(rows: list) -> None:
    print(f"\n{'map':<24} {'V/E/F':<10} {'g':>2}  {'period':>6} {'s':>4}  {'ms':>8}  PST")
    print("-" * 90)
    for row in rows:
        period = "-" if row["period"] is None else row["period"]
        s = "-" if row["s"] is None else row["s"]
        print(
            f"{row['map']:<24} {row['V/E/F']:<10} {row['genus']:>2}  {period:>6} {s:>4}"
            f"  {row['ms']:>8.1f}  {row['pst']}"
        )


# =============================================================================
# TRACE AND FRAMES
# =============================================================================


def trace_grid(output_dir: Path, steps: int = 10) -> None:
    spec = FamilySpec.parse("grid", ["2", "5"])
    structure = spec.build()
    op = build_operator(incidence(structure))
    u, v = grid_vertex(5, 0, 0), grid_vertex(5, 1, 0)

    frame = probability_trace(op, u, v, steps)
    (output_dir / "grid_2_5_trace.csv").write_text(trace_csv(frame), encoding="utf-8")
    print(frame.to_string(index=False))

    paths = write_frames(structure, op, u, steps, output_dir / "frames", layout=spec.layout())
    print(f"\n   ✓ {len(paths)} frame(s) in {output_dir / 'frames'}")


def run_demo() -> None:
    print("=" * 70)
    print("PERFECT STATE TRANSFER GALLERY")
    print("=" * 70)

    output_dir = Path("demo_output")
    output_dir.mkdir(exist_ok=True)

    configure_logging("WARNING")
    settings = MapwalkSettings(max_steps=64)
    rows = analyze_gallery(settings)
    print_table(rows)

    print("\n" + "=" * 70)
    print("(2,5)-grid: (0,0) -> (1,0)")
    print("=" * 70)
    trace_grid(output_dir)

    summary = [{k: v for k, v in row.items() if k != "ms"} for row in rows]
    (output_dir / "gallery.json").write_bytes(canonical_json(summary))
    print(f"   ✓ Summary saved: {output_dir / 'gallery.json'}")


if __name__ == "__main__":
    run_demo()
