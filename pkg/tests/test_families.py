"""
Tests for the map family generators and FamilySpec

Run with:
    pytest tests/test_families.py -v
"""

import sys
from pathlib import Path

import pytest

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from mapwalk.core import emit_rotmap, parse_rotmap
from mapwalk.errors import MapValidationError
from mapwalk.families import (
    FamilySpec,
    LayoutKind,
    bouquet,
    dipole,
    dual_dipole,
    grid_vertex,
    heawood_torus,
    is_quasi_tree_bouquet,
    k7_torus,
    planar_path,
    planar_tree,
    quasi_tree_bouquet,
    star,
    toroidal_grid,
    toroidal_grid_doubled,
)


class TestGenerators:
    """Tests for the individual generators."""

    @pytest.mark.parametrize("n", [1, 3, 5, 7])
    def test_odd_dipole(self, n):
        """Test odd dipoles have one face and genus (n-1)/2."""
        structure = dipole(n)
        assert structure.num_faces == 1
        assert structure.genus == (n - 1) // 2

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_even_dipole(self, n):
        """Test even dipoles have two faces of degree n."""
        structure = dipole(n)
        assert structure.face_degrees == (n, n)

    def test_dual_dipole(self):
        """Test the dual of X_5 is a one-vertex map."""
        structure = dual_dipole(5)
        assert structure.num_vertices == 1
        assert structure.num_faces == 2

    @pytest.mark.parametrize("n, m", [(1, 6), (2, 3), (3, 4), (4, 4)])
    def test_grid_counts(self, n, m):
        """Test V = nm, E = 2nm, F = nm on the torus."""
        structure = toroidal_grid(n, m)
        assert (structure.num_vertices, structure.num_edges, structure.num_faces) == (
            n * m,
            2 * n * m,
            n * m,
        )
        assert structure.genus == 1

    def test_grid_doubled(self):
        """Test Y_5 doubles the horizontal edges of the (1,5)-grid."""
        structure = toroidal_grid_doubled(5)
        assert structure.num_vertices == 5
        assert structure.num_edges == 15
        assert structure.num_faces == 10
        assert structure.genus == 1

    def test_quasi_tree_bouquet(self):
        """Test the one-vertex one-face bouquet."""
        structure = quasi_tree_bouquet(2)
        assert is_quasi_tree_bouquet(structure)
        assert not is_quasi_tree_bouquet(dipole(3))

    def test_trees(self, path3, star5):
        """Test paths and stars are plane trees."""
        assert path3.vertex_degrees == (1, 2, 1)
        assert star5.vertex_degrees == (5, 1, 1, 1, 1, 1)
        assert path3.num_faces == star5.num_faces == 1

    def test_named_maps(self):
        """Test K_7 and Heawood are dual torus maps."""
        k7, heawood = k7_torus(), heawood_torus()
        assert (k7.num_vertices, k7.num_edges, k7.num_faces) == (7, 21, 14)
        assert (heawood.num_vertices, heawood.num_edges, heawood.num_faces) == (14, 21, 7)
        assert set(heawood.vertex_degrees) == {3}

    @pytest.mark.parametrize(
        "build",
        [
            lambda: dipole(0),
            lambda: toroidal_grid(0, 3),
            lambda: toroidal_grid_doubled(1),
            lambda: quasi_tree_bouquet(0),
            lambda: bouquet("0 x"),
            lambda: planar_path(1),
            lambda: star(0),
            lambda: planar_tree([(0, 1), (1, 2), (0, 2)]),
            lambda: planar_tree([(0, 2)]),
        ],
    )
    def test_invalid_parameters(self, build):
        """Test bad parameters raise MapValidationError."""
        with pytest.raises(MapValidationError):
            build()

    @pytest.mark.parametrize(
        "structure",
        [dipole(4), toroidal_grid_doubled(3), quasi_tree_bouquet(2), heawood_torus()],
    )
    def test_rotmap_round_trip(self, structure):
        """Test generated maps survive emit and parse unchanged."""
        assert parse_rotmap(emit_rotmap(structure)) == structure


class TestFamilySpec:
    """Tests for FamilySpec parsing, building and vertex ids."""

    def test_parse_grid(self):
        """Test comma separated parameters."""
        spec = FamilySpec.parse("grid", ["2,3"])
        assert spec.params == (2, 3)
        assert spec.label == "grid(2, 3)"
        assert spec.build().num_vertices == 6

    def test_aliases(self):
        """Test dashes and aliases resolve to canonical names."""
        assert FamilySpec.parse("grid-doubled", ["5"]).name == "grid_doubled"
        assert FamilySpec.parse("K7", []).name == "k7_torus"
        assert FamilySpec.parse("path", ["4"]).name == "path_tree"

    def test_bouquet_word(self):
        """Test a bouquet keeps its word."""
        spec = FamilySpec.parse("bouquet", ["0 2 1 3"])
        assert spec.word == (0, 2, 1, 3)
        assert spec.build().genus == 1
        assert spec.to_dict() == {"name": "bouquet", "params": [0, 2, 1, 3]}

    @pytest.mark.parametrize(
        "name, params",
        [("nope", []), ("grid", ["2"]), ("dipole", ["x"]), ("heawood", ["1"])],
    )
    def test_parse_errors(self, name, params):
        """Test unknown names and wrong arity."""
        with pytest.raises(MapValidationError):
            FamilySpec.parse(name, params)

    def test_grid_vertex_ids(self):
        """Test 'a,b' resolves row-major."""
        spec = FamilySpec.parse("grid", ["2", "3"])
        assert spec.vertex_id("1,2") == 5 == grid_vertex(3, 1, 2)
        assert spec.vertex_id("4") == 4

    @pytest.mark.parametrize("token", ["2,0", "a,b", "x"])
    def test_bad_grid_vertex(self, token):
        """Test out of range and malformed vertex tokens."""
        with pytest.raises(MapValidationError):
            FamilySpec.parse("grid", ["2", "3"]).vertex_id(token)

    def test_pair_needs_grid(self):
        """Test 'a,b' ids only apply to grids."""
        with pytest.raises(MapValidationError):
            FamilySpec.parse("dipole", ["3"]).vertex_id("0,1")

    def test_layouts(self):
        """Test grids get a torus layout and the rest a circle."""
        torus = FamilySpec.parse("grid", ["2", "3"]).layout()
        assert torus.kind is LayoutKind.TORUS
        assert torus.torus_shape == (2, 3)
        assert torus.positions.shape == (6, 2)

        circle = FamilySpec.parse("dipole", ["3"]).layout()
        assert circle.kind is LayoutKind.CIRCLE
        assert circle.positions.shape == (2, 2)
        assert circle.to_dict()["torus_shape"] is None
