"""
mapwalk
=======

Vertex-face discrete-time quantum walks on orientable maps.

A map is given by its rotation system; the walk runs on its arcs with
transition matrix U = (2P - I)(2Q - I). mapwalk builds U exactly over the
rationals and decides perfect state transfer, periodicity and U^s = I by
exact equalities.

Components:
-----------
- core: rotation systems, faces, dual, incidence matrices, .rotmap I/O, symmetry
- spectra: exact rational matrices, characteristic polynomials, eigenvalues of U
- walk: the walk operator, evolution and the Chebyshev projected sequence
- analysis: PST and periodicity detectors, characterizations, MapAnalyzer
- families: dipoles, toroidal grids, trees, cycles, bouquets and named maps
- cli: the ``mapwalk`` command

Example:
--------
>>> from mapwalk import MapAnalyzer, toroidal_grid
>>> report = MapAnalyzer().analyze(toroidal_grid(1, 6))
>>> report.map_period, report.identity_power
(6, 6)
"""

__version__ = "0.1.0"
__author__ = "mapwalk developers"

from .analysis import AnalysisReport, MapAnalyzer
from .config import MapwalkSettings
from .core import MapStructure, build_map, dual, incidence, parse_rotmap, read_rotmap
from .errors import (
    ConsistencyError,
    IllConditionedSpectrumError,
    MapValidationError,
    MapwalkError,
    PreconditionError,
    RotmapParseError,
)
from .families import FamilySpec, dipole, toroidal_grid, toroidal_grid_doubled
from .walk import build_operator, evolve, projected_sequence, transfer_probability

__all__ = [
    "AnalysisReport",
    "ConsistencyError",
    "FamilySpec",
    "IllConditionedSpectrumError",
    "MapAnalyzer",
    "MapStructure",
    "MapValidationError",
    "MapwalkError",
    "MapwalkSettings",
    "PreconditionError",
    "RotmapParseError",
    "__version__",
    "build_map",
    "build_operator",
    "dipole",
    "dual",
    "evolve",
    "incidence",
    "parse_rotmap",
    "projected_sequence",
    "read_rotmap",
    "toroidal_grid",
    "toroidal_grid_doubled",
    "transfer_probability",
]
