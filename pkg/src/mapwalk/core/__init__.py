"""
Core map structures for mapwalk.

Components:
- maps: dart-based rotation systems, face tracing, dual, mirror, profile
- incidence: N, M, L, R, C, D, Delta with exact identity checks
- rotmap: the ``.rotmap`` text format
- symmetry: automorphisms, reflections and the symmetry summary

Example:
--------
>>> from mapwalk.core import build_map, incidence
>>> x2 = build_map([[1, 3], [0, 2]])
>>> x2.num_faces, x2.genus
(2, 0)
>>> incidence(x2).C.to_int_array().tolist()
[[1, 1], [1, 1]]
"""

from .incidence import IncidenceMatrices, adjacency, dual_adjacency, incidence
from .maps import (
    MapProfile,
    MapStructure,
    build_map,
    canonical,
    dual,
    facial_walks,
    map_profile,
    mirror,
    trace_faces,
    vertex_face_counts,
)
from .rotmap import emit_rotmap, parse_rotmap, read_rotmap, write_rotmap
from .symmetry import (
    Automorphism,
    SymmetrySummary,
    automorphisms,
    reflections,
    symmetry_summary,
    verify_automorphism,
    vertex_orbits,
)

__all__ = [
    "MapStructure",
    "MapProfile",
    "build_map",
    "canonical",
    "dual",
    "mirror",
    "facial_walks",
    "map_profile",
    "trace_faces",
    "vertex_face_counts",
    "IncidenceMatrices",
    "incidence",
    "adjacency",
    "dual_adjacency",
    "parse_rotmap",
    "read_rotmap",
    "emit_rotmap",
    "write_rotmap",
    "Automorphism",
    "SymmetrySummary",
    "automorphisms",
    "reflections",
    "symmetry_summary",
    "verify_automorphism",
    "vertex_orbits",
]
