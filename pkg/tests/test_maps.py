"""
Tests for rotation systems, incidence matrices, .rotmap I/O and symmetry

Run with:
    pytest tests/test_maps.py -v
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from mapwalk.core import (
    adjacency,
    automorphisms,
    build_map,
    dual,
    dual_adjacency,
    emit_rotmap,
    facial_walks,
    incidence,
    map_profile,
    mirror,
    parse_rotmap,
    read_rotmap,
    symmetry_summary,
    verify_automorphism,
    vertex_orbits,
    write_rotmap,
)
from mapwalk.core.incidence import verify_identities
from mapwalk.errors import ConsistencyError, MapValidationError, RotmapParseError
from mapwalk.families import (
    FAMILIES,
    bouquet,
    dipole,
    k7_torus,
    planar_cycle,
    quasi_tree_bouquet,
    star,
    toroidal_grid,
)

X2_TEXT = """# X_2: two vertices joined by two edges on the sphere
darts 4
v 0: 1 3
v 1: 0 2
"""

# Every registered family, at sizes with at most 200 edges
FAMILY_PARAMS = {
    "dipole": [(n,) for n in range(1, 11)],
    "grid": [(n, m) for n in range(1, 6) for m in range(1, 6)] + [(5, 10), (10, 10)],
    "grid_doubled": [(m,) for m in range(2, 9)],
    "cycle": [(n,) for n in range(3, 11)],
    "path_tree": [(n,) for n in range(2, 11)],
    "star": [(n,) for n in range(1, 11)],
    "bouquet": [("0 1",), ("0 1 2 3",), ("0 2 1 3",), ("0 2 4 1 3 5",), ("0 3 2 1",)],
    "quasi_tree_bouquet": [(g,) for g in range(1, 6)],
    "dual_dipole": [(n,) for n in range(1, 11)],
    "k7_torus": [()],
    "heawood": [()],
}
FAMILY_CASES = [
    (f"{name}-{'-'.join(str(p).replace(' ', '') for p in params)}", structure)
    for name, grid in FAMILY_PARAMS.items()
    for params in grid
    for structure in [FAMILIES[name].builder(*params)]
    if structure.num_edges <= 200
]
FAMILY_IDS = [case_id for case_id, _ in FAMILY_CASES]
FAMILY_INSTANCES = [structure for _, structure in FAMILY_CASES]


class TestMapStructure:
    """Tests for MapStructure construction and derived data."""

    def test_x2_counts(self, x2):
        """Test X_2 has 2 vertices, 2 edges, 2 faces on the sphere."""
        assert (x2.num_vertices, x2.num_edges, x2.num_faces, x2.genus) == (2, 2, 2, 0)

    def test_x2_faces(self, x2):
        """Test faces are numbered by first appearance."""
        assert x2.face_lists == ((1, 2), (3, 0))
        assert x2.face_of == (1, 0, 0, 1)

    def test_phi_is_rotation_after_reversal(self, x2):
        """Test the face successor."""
        for d in range(x2.dart_count):
            assert x2.phi(d) == x2.rotation[d ^ 1]

    def test_facial_walk(self, x2):
        """Test the facial walk of face 0 alternates vertices and edges."""
        assert facial_walks(x2)[0] == [(0, 0), (1, 1)]

    def test_repr(self, x2):
        """Test the short representation."""
        assert repr(x2) == "MapStructure(V=2, E=2, F=2, g=0)"

    @pytest.mark.parametrize(
        "rotation",
        [
            [[0, 1, 2]],  # odd dart count
            [[0, 0], [1, 1]],  # duplicate dart
            [[0, 1], [2, 3]],  # disconnected
            [[0, 1, 2, 5]],  # missing dart 3
            [[0, 1], []],  # empty rotation
        ],
    )
    def test_invalid_rotations(self, rotation):
        """Test invalid rotation systems are rejected."""
        with pytest.raises(MapValidationError):
            build_map(rotation)

    def test_dual_involution(self, grid_2_3):
        """Test the dual of the dual is the map itself."""
        assert dual(dual(grid_2_3)) == grid_2_3

    def test_dual_swaps_counts(self, grid_2_3):
        """Test the dual swaps vertices and faces and keeps the genus."""
        other = dual(toroidal_grid(3, 4))
        assert (other.num_vertices, other.num_faces, other.genus) == (12, 12, 1)
        assert dual(grid_2_3).num_edges == grid_2_3.num_edges

    def test_dual_transposes_c(self, grid_2_3):
        """Test C of the dual is the transpose of C."""
        assert incidence(dual(grid_2_3)).C == incidence(grid_2_3).C.T

    def test_mirror_keeps_genus(self):
        """Test mirroring keeps the surface."""
        assert mirror(quasi_tree_bouquet(2)).genus == 2

    @pytest.mark.parametrize(
        "structure, genus",
        [
            (bouquet("0 2 1 3"), 1),
            (quasi_tree_bouquet(3), 3),
            (dipole(5), 2),
            (dipole(4), 1),
            (planar_cycle(6), 0),
            (toroidal_grid(2, 3), 1),
            (k7_torus(), 1),
        ],
    )
    def test_genus(self, structure, genus):
        """Test the genus of standard maps."""
        assert structure.genus == genus


class TestProfile:
    """Tests for map_profile."""

    def test_grid_is_circular(self, grid_2_3):
        """Test the (2,3)-grid is a circular type (4,4) map."""
        profile = map_profile(grid_2_3)
        assert profile.map_type == (4, 4)
        assert profile.multiplicity == 1
        assert profile.is_circular

    def test_thin_grid_multiplicity(self, grid_1_6):
        """Test the (1,6)-grid meets each face twice per vertex."""
        profile = map_profile(grid_1_6)
        assert profile.multiplicity == 2
        assert not profile.is_circular

    def test_star_not_uniform(self, star5):
        """Test a star has no uniform vertex degree."""
        profile = map_profile(star5)
        assert profile.vertex_degree is None
        assert profile.map_type is None
        assert profile.to_dict()["type"] is None


class TestIncidence:
    """Tests for the incidence matrices."""

    def test_x2_matrices(self, x2):
        """Test N, M and C of X_2."""
        mats = incidence(x2)
        assert mats.N.to_int_array().tolist() == [[0, 1], [1, 0], [0, 1], [1, 0]]
        assert mats.M.to_int_array().tolist() == [[0, 1], [1, 0], [1, 0], [0, 1]]
        assert mats.C.to_int_array().tolist() == [[1, 1], [1, 1]]
        assert mats.L.to_int_array().tolist() == [[1, 0], [1, 0], [0, 1], [0, 1]]

    @pytest.mark.parametrize("structure", FAMILY_INSTANCES, ids=FAMILY_IDS)
    def test_identities(self, structure):
        """Test every incidence identity holds exactly."""
        mats = incidence(structure, verify=True)
        n, m = mats.N.to_int_array(), mats.M.to_int_array()
        r = mats.R.to_int_array()
        assert np.array_equal(n.T @ n, mats.D.to_int_array())
        assert np.array_equal(m.T @ m, mats.Delta.to_int_array())
        assert np.array_equal(n.T @ r @ m, n.T @ m)
        assert np.array_equal(n.T @ r @ n, adjacency(structure))
        assert np.array_equal(m.T @ r @ m, dual_adjacency(structure))
        assert adjacency(structure).sum(axis=1).tolist() == list(structure.vertex_degrees)
        assert dual_adjacency(structure).sum(axis=1).tolist() == list(structure.face_degrees)

    def test_registry_covered(self):
        """Test the identity sweep reaches every registered family."""
        assert set(FAMILY_PARAMS) == set(FAMILIES)
        assert {name.split("-")[0] for name in FAMILY_IDS} == set(FAMILIES)

    def test_adjacency(self, x2):
        """Test A(X) counts parallel edges."""
        assert adjacency(x2).tolist() == [[0, 2], [2, 0]]
        assert dual_adjacency(x2).tolist() == [[0, 2], [2, 0]]

    def test_loop_counts_twice(self):
        """Test a single loop puts 2 on the diagonal."""
        assert adjacency(bouquet("0 1")).tolist() == [[2]]

    def test_dual_adjacency_of_cycle(self):
        """Test the dual of a cycle is a dipole."""
        assert dual_adjacency(planar_cycle(5)).tolist() == [[0, 5], [5, 0]]

    def test_dual_adjacency_of_star(self):
        """Test a star's single face borders itself along every edge."""
        assert dual_adjacency(star(3)).tolist() == [[6]]

    def test_wrong_adjacency_rejected(self, grid_2_3):
        """Test verify_identities compares N^T R N against the dart count."""
        mats = incidence(grid_2_3)
        arrays = [
            getattr(mats, name).to_int_array() for name in ("N", "M", "L", "R", "C", "D", "Delta")
        ]
        wrong = adjacency(grid_2_3)
        wrong[0, 1] += 1
        wrong[0, 2] -= 1
        with pytest.raises(ConsistencyError, match=r"A\(X\)"):
            verify_identities(*arrays, vertex_adjacency=wrong)
        verify_identities(
            *arrays,
            vertex_adjacency=adjacency(grid_2_3),
            face_adjacency=dual_adjacency(grid_2_3),
        )

    def test_c_hat_rows(self, grid_2_3):
        """Test D^-1 C Delta^-1 C^T is row stochastic."""
        c_hat = incidence(grid_2_3).c_hat()
        for v in range(c_hat.rows):
            assert sum(c_hat[v, w] for w in range(c_hat.cols)) == 1


class TestRotmap:
    """Tests for the .rotmap format."""

    def test_parse_x2(self, x2):
        """Test the documented example parses to X_2."""
        assert parse_rotmap(X2_TEXT) == x2

    def test_round_trip(self):
        """Test emitted text parses back to the same map."""
        grid = toroidal_grid(2, 3)
        assert parse_rotmap(emit_rotmap(grid, comment="grid 2 3")) == grid

    def test_emit_header(self, x2):
        """Test the summary comment and header."""
        lines = emit_rotmap(x2).splitlines()
        assert lines[0] == "# V=2 E=2 F=2 g=0"
        assert lines[1] == "darts 4"
        assert lines[2] == "v 0: 1 3"

    def test_file_round_trip(self, tmp_path, x2):
        """Test atomic write then read."""
        path = write_rotmap(x2, tmp_path / "x2.rotmap")
        assert read_rotmap(path) == x2
        assert not list(tmp_path.glob(".*.tmp"))

    @pytest.mark.parametrize(
        "text, line_number",
        [
            ("v 0: 1 3\n", 1),
            ("darts 4\nv 0: 1 3\nv 0: 0 2\n", 3),
            ("darts 4\nv 0: 1 x\nv 1: 0 2\n", 2),
            ("darts 4\nv 0: 1 7\nv 1: 0 2\n", 2),
            ("darts 4\ndarts 4\n", 2),
            ("darts 4\nv 0:\n", 2),
            ("# only a comment\ndarts 4\nv 0: 1 3\nv 2: 0 2\n", 2),
            ("darts 6\nv 0: 1 3\nv 1: 0 2\n", 1),
        ],
    )
    def test_parse_errors(self, text, line_number):
        """Test malformed text reports the offending line."""
        with pytest.raises(RotmapParseError) as info:
            parse_rotmap(text)
        assert info.value.line_number == line_number
        assert str(info.value).startswith(f"line {line_number}:")

    def test_missing_file(self, tmp_path):
        """Test an unreadable path is a validation error."""
        with pytest.raises(MapValidationError):
            read_rotmap(tmp_path / "absent.rotmap")


class TestSymmetry:
    """Tests for automorphisms and the symmetry summary."""

    def test_x2_regular(self, x2):
        """Test X_2 is orientably regular."""
        autos = automorphisms(x2)
        assert len(autos) == 4
        for auto in autos:
            verify_automorphism(x2, auto)

    def test_grid_vertex_transitive(self, grid_2_3):
        """Test translations make the grid vertex transitive."""
        autos = automorphisms(grid_2_3)
        assert vertex_orbits(grid_2_3, autos) == [list(range(6))]

    def test_star_orbits(self, star5):
        """Test the centre of a star is fixed."""
        assert vertex_orbits(star5, automorphisms(star5)) == [[0], [1, 2, 3, 4, 5]]

    def test_k7_chiral(self):
        """Test the K_7 torus map is orientably regular but chiral."""
        summary = symmetry_summary(k7_torus())
        assert summary.group_order == 42
        assert summary.orientably_regular
        assert summary.chiral
        assert not summary.reflexible
