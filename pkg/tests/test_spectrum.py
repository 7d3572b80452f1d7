"""
Tests for the spectrum of U assembled from Chat Chat^T

Run with:
    pytest tests/test_spectrum.py -v
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from tests.conftest import operator_for

from mapwalk.core import incidence
from mapwalk.errors import PreconditionError
from mapwalk.families import dipole, k7_torus, star
from mapwalk.spectra.spectrum import (
    advisory_root_orders,
    exact_eigenspace_dimensions,
    float_eigenspace_dimensions,
    root_polynomial,
    trace_formula,
    u_spectrum,
    uniform_type_trace,
    verify_root_space,
)


@pytest.fixture
def grid_spectrum(grid_2_3, settings):
    return u_spectrum(grid_2_3, incidence(grid_2_3), settings)


class TestUSpectrum:
    """Tests for u_spectrum on the (2,3)-grid and small maps."""

    def test_eigenspace_dimensions(self, grid_spectrum):
        """Test dims of the +1 and -1 eigenspaces."""
        assert grid_spectrum.dims == (14, 6)
        assert grid_spectrum.rank_c == 3
        assert grid_spectrum.has_minus_one

    def test_multiplicities_cover_arcs(self, grid_spectrum, grid_2_3):
        """Test multiplicities add up to the number of arcs."""
        assert grid_spectrum.total_multiplicity == grid_2_3.dart_count

    def test_rational_chat(self, grid_spectrum):
        """Test Chat Chat^T = C C^T / 16 has eigenvalues 0, 1/4 and 1."""
        assert grid_spectrum.rational_chat == (0, 0, 0, Fraction(1, 4), Fraction(1, 4), 1)

    def test_interior_roots(self, grid_spectrum):
        """Test l = 1/4 gives the primitive cube roots of unity."""
        interior = [e for e in grid_spectrum.u_eigs if e.source == pytest.approx(0.25)]
        assert len(interior) == 2
        for eig in interior:
            assert eig.multiplicity == 2
            assert eig.value.real == pytest.approx(-0.5)
            assert abs(eig.value) == pytest.approx(1.0)

    def test_trace(self, grid_spectrum):
        """Test the spectral trace."""
        assert grid_spectrum.trace == pytest.approx(6.0)

    def test_x2(self, x2, settings):
        """Test X_2 has only +1 and -1."""
        spectral = u_spectrum(x2, incidence(x2), settings)
        assert spectral.dims == (2, 2)
        assert spectral.rational_chat == (0, 1)

    def test_unequal_degrees(self, settings):
        """Test a star with unequal vertex degrees."""
        structure = star(2)
        spectral = u_spectrum(structure, incidence(structure), settings)
        assert spectral.total_multiplicity == structure.dart_count

    def test_to_dict(self, grid_spectrum):
        """Test the serialized summary."""
        payload = grid_spectrum.to_dict()
        assert payload["dim_plus1"] == 14
        assert payload["rational_chat"] == ["0", "0", "0", "1/4", "1/4", "1"]


class TestTraces:
    """Tests for the trace identities."""

    def test_trace_formula(self, grid_2_3):
        """Test tr U from C matches the exact trace."""
        op = operator_for(grid_2_3)
        assert trace_formula(op.incidence) == op.U.trace() == 6

    def test_uniform_trace(self, grid_2_3):
        """Test the uniform-type shortcut."""
        assert uniform_type_trace(grid_2_3) == 6

    def test_uniform_trace_needs_type(self, star5):
        """Test maps without a type have no shortcut."""
        assert uniform_type_trace(star5) is None

    @pytest.mark.parametrize("structure", [dipole(4), k7_torus(), star(4)])
    def test_trace_formula_general(self, structure):
        """Test the trace formula beyond grids."""
        op = operator_for(structure)
        assert trace_formula(op.incidence) == op.U.trace()


class TestEigenspaces:
    """Tests for eigenspace dimensions and root spaces."""

    def test_exact_dimensions(self, grid_2_3):
        """Test exact kernel dimensions match the formula."""
        assert exact_eigenspace_dimensions(operator_for(grid_2_3).U) == (14, 6)

    def test_float_dimensions(self, grid_2_3):
        """Test float kernel dimensions match the formula."""
        assert float_eigenspace_dimensions(operator_for(grid_2_3).U_float) == (14, 6)

    def test_root_polynomial(self):
        """Test t^2 - (4l - 2)t + 1 for l = 1/4 and 1/2."""
        assert str(root_polynomial(Fraction(1, 4))) == "t^2 + t + 1"
        assert str(root_polynomial(Fraction(1, 2))) == "t^2 + 1"

    def test_root_space(self, grid_2_3):
        """Test p(U) kills the l = 1/4 block."""
        assert verify_root_space(operator_for(grid_2_3), Fraction(1, 4))

    @pytest.mark.parametrize("lam", [Fraction(0), Fraction(1), Fraction(1, 3)])
    def test_root_space_domain(self, grid_2_3, lam):
        """Test 0, 1 and non-eigenvalues are rejected."""
        with pytest.raises(PreconditionError):
            verify_root_space(operator_for(grid_2_3), lam)

    def test_advisory_orders(self, grid_spectrum):
        """Test 1, -1 and cube roots of unity give orders 1, 2, 3."""
        assert advisory_root_orders(grid_spectrum, 6, 6) == [1, 2, 3]
