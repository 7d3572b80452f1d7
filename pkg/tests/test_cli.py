"""
Tests for the mapwalk command line, report documents and frames

Run with:
    pytest tests/test_cli.py -v
"""

import json
import sys
from pathlib import Path

import pytest
from loguru import logger

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from tests.conftest import operator_for

from mapwalk.analysis import MapAnalyzer
from mapwalk.cli import canonical_json, main, probability_trace, render_frame, trace_csv
from mapwalk.cli.main import EXIT_INPUT, EXIT_INTERNAL, EXIT_OK
from mapwalk.core import parse_rotmap, write_rotmap
from mapwalk.families import circle_layout, dipole, quasi_tree_bouquet, torus_layout


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    """Keep each run away from .env files and drop log sinks afterwards."""
    monkeypatch.chdir(tmp_path)
    yield
    logger.remove()


class TestFamilyCommand:
    """Tests for ``mapwalk family``."""

    def test_stdout(self, capsys):
        """Test the generated map is printed as .rotmap."""
        assert main(["family", "dipole", "5"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("# family dipole(5)\n")
        assert parse_rotmap(out) == dipole(5)

    def test_out_file(self, tmp_path):
        """Test --out writes the file."""
        path = tmp_path / "grid.rotmap"
        assert main(["family", "grid", "2", "3", "--out", str(path)]) == EXIT_OK
        assert parse_rotmap(path.read_text()).num_vertices == 6

    @pytest.mark.parametrize("argv", [["family", "nope"], ["family", "grid", "2"]])
    def test_bad_family(self, argv):
        """Test unknown names and wrong arity exit with 2."""
        assert main(argv) == EXIT_INPUT


class TestAnalyzeCommand:
    """Tests for ``mapwalk analyze``."""

    def test_family_report(self, tmp_path):
        """Test the JSON report of X_5."""
        path = tmp_path / "x5.json"
        assert main(["analyze", "--family", "dipole", "5", "--json", str(path)]) == EXIT_OK
        document = json.loads(path.read_text(encoding="utf-8"))
        assert document["source"] == "dipole(5)"
        assert document["map"]["faces"] == 1
        assert document["report"]["pst_pairs"][0] == {"u": 0, "v": 1, "tau": 1}
        assert document["report"]["identity"]["s"] == 2
        assert document["spectral"]["dim_minus1"] == 1

    def test_deterministic(self, tmp_path):
        """Test two runs give byte-identical reports."""
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        main(["analyze", "--family", "grid", "1", "6", "--json", str(first)])
        main(["analyze", "--family", "grid", "1", "6", "--json", str(second)])
        assert first.read_bytes() == second.read_bytes()

    def test_rotmap_source_to_stdout(self, tmp_path, capsys, x2):
        """Test a .rotmap path and stdout output."""
        path = write_rotmap(x2, tmp_path / "x2.rotmap")
        assert main(["analyze", str(path)]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["source"] == str(path)
        assert document["report"]["u_squared"]["holds"]

    def test_config_file(self, tmp_path):
        """Test --config and --max-steps layering."""
        config = tmp_path / "mapwalk.yaml"
        config.write_text("max_steps: 12\nvariant_max_steps: 4\n")
        path = tmp_path / "out.json"
        argv = ["analyze", "--family", "dipole", "3", "--config", str(config), "--json", str(path)]
        assert main(argv) == EXIT_OK
        document = json.loads(path.read_text())
        assert document["report"]["horizon"] == 12
        assert document["config"]["variant_max_steps"] == 4

        assert main(argv + ["--max-steps", "9"]) == EXIT_OK
        assert json.loads(path.read_text())["report"]["horizon"] == 9

    @pytest.mark.parametrize(
        "argv",
        [
            ["analyze"],
            ["analyze", "absent.rotmap"],
            ["analyze", "--family", "dipole", "5", "--max-steps", "0"],
        ],
    )
    def test_input_errors(self, argv):
        """Test missing sources and invalid settings exit with 2."""
        assert main(argv) == EXIT_INPUT

    def test_parse_error(self, tmp_path):
        """Test malformed .rotmap text exits with 2."""
        path = tmp_path / "bad.rotmap"
        path.write_text("darts 4\nv 0: 1 9\n")
        assert main(["analyze", str(path)]) == EXIT_INPUT

    def test_internal_error(self, monkeypatch):
        """Test unexpected failures exit with 1."""

        def broken(self, structure):
            raise RuntimeError("boom")

        monkeypatch.setattr(MapAnalyzer, "run", broken)
        assert main(["analyze", "--family", "dipole", "3"]) == EXIT_INTERNAL


class TestEvolveCommand:
    """Tests for ``mapwalk evolve``."""

    def test_trace_stdout(self, capsys):
        """Test the X_5 trace from 0 to 1."""
        argv = ["evolve", "--family", "dipole", "5", "--start-vertex", "0", "--steps", "2"]
        assert main(argv + ["--trace", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "t,probability,exact\n0,0,0\n1,1,1\n2,0,0\n"

    def test_grid_vertex_ids(self, tmp_path):
        """Test 'a,b' ids and the CSV file."""
        path = tmp_path / "trace.csv"
        argv = [
            "evolve", "--family", "grid", "1", "6", "--start-vertex", "0,0",
            "--trace", "0,3", "--steps", "3", "--trace-out", str(path),
        ]  # fmt: skip
        assert main(argv) == EXIT_OK
        assert path.read_text().splitlines()[-1] == "3,1,1"

    def test_frames(self, tmp_path):
        """Test one SVG frame per step."""
        frames = tmp_path / "frames"
        argv = [
            "evolve", "--family", "grid", "2", "3", "--start-vertex", "0",
            "--steps", "2", "--trace-out", str(tmp_path / "t.csv"), "--frames", str(frames),
        ]  # fmt: skip
        assert main(argv) == EXIT_OK
        names = sorted(p.name for p in frames.iterdir())
        assert names == ["frame_0000.svg", "frame_0001.svg", "frame_0002.svg"]
        assert b"<svg" in (frames / "frame_0000.svg").read_bytes()

    @pytest.mark.parametrize(
        "extra",
        [
            ["--start-vertex", "7", "--steps", "2"],
            ["--start-vertex", "0", "--steps", "-1"],
            ["--start-vertex", "0", "--steps", "2", "--trace", "9"],
            ["--start-vertex", "x", "--steps", "2"],
        ],
    )
    def test_input_errors(self, extra):
        """Test bad vertices and step counts exit with 2."""
        assert main(["evolve", "--family", "dipole", "3"] + extra) == EXIT_INPUT


class TestOutputs:
    """Tests for canonical JSON, traces and frames."""

    def test_canonical_json(self):
        """Test sorted keys, compact separators and raw UTF-8."""
        assert canonical_json({"b": 1, "a": ["é", 2]}) == '{"a":["é",2],"b":1}'.encode("utf-8")

    def test_trace_frame(self, x2_op):
        """Test the trace columns and exact values."""
        frame = probability_trace(x2_op, 0, 1, 2)
        assert list(frame.columns) == ["t", "probability", "exact"]
        assert frame["exact"].tolist() == ["0", "1", "0"]
        assert trace_csv(frame).endswith("2,0,0\n")

    def test_render_deterministic(self, grid_2_3):
        """Test the same state renders to identical bytes."""
        op = operator_for(grid_2_3)
        amplitudes = op.U_float[:, 0]
        layout = torus_layout(2, 3)
        first = render_frame(grid_2_3, layout, amplitudes, title="t = 1")
        second = render_frame(grid_2_3, layout, amplitudes, title="t = 1")
        assert first == second

    def test_render_loops(self):
        """Test parallel edges and loops draw on a circle."""
        for structure in (dipole(4), quasi_tree_bouquet(1)):
            layout = circle_layout(structure.num_vertices)
            svg = render_frame(structure, layout, [0.5] * structure.dart_count)
            assert svg.lstrip().startswith(b"<?xml")
