"""
Shared fixtures for the mapwalk test suite.

Run with:
    pytest tests -v
    pytest tests -v -m "not slow"
"""

import sys
from pathlib import Path

import pytest

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from mapwalk.config import MapwalkSettings
from mapwalk.core import build_map, incidence
from mapwalk.families import planar_path, star, toroidal_grid
from mapwalk.walk import build_operator


def operator_for(structure):
    """Exact walk operator of a map, identities verified."""
    return build_operator(incidence(structure))


@pytest.fixture
def x2():
    """The two-vertex, two-edge dipole X_2 on the sphere."""
    return build_map([[1, 3], [0, 2]])


@pytest.fixture
def x2_op(x2):
    """Walk operator of X_2."""
    return operator_for(x2)


@pytest.fixture
def grid_2_3():
    """Toroidal (2,3)-grid."""
    return toroidal_grid(2, 3)


@pytest.fixture
def grid_1_6():
    """Toroidal (1,6)-grid."""
    return toroidal_grid(1, 6)


@pytest.fixture
def star5():
    """K_{1,5} in the plane, centre 0."""
    return star(5)


@pytest.fixture
def path3():
    """P_3 in the plane, centre 1."""
    return planar_path(3)


@pytest.fixture
def settings():
    """Default settings, independent of the environment."""
    return MapwalkSettings(_env_file=None)
