"""
Map family generators.

Components:
- dipole, dual_dipole: two-vertex maps X_n and their duals
- toroidal_grid, toroidal_grid_doubled: (n,m)-grids and Y_m on the torus
- planar_cycle, planar_tree, planar_path, star: genus-0 maps
- bouquet, quasi_tree_bouquet: single-vertex maps
- k7_torus, heawood_torus: the K_7 triangulation and its dual
- FamilySpec, MapLayout: name registry and drawing layouts

Example:
--------
>>> from mapwalk.families import toroidal_grid
>>> toroidal_grid(2, 3).summary()["genus"]
1
"""

from .generators import (
    FAMILIES,
    FamilySpec,
    LayoutKind,
    MapLayout,
    bouquet,
    circle_layout,
    dipole,
    dual_dipole,
    grid_vertex,
    heawood_torus,
    is_quasi_tree_bouquet,
    k7_torus,
    planar_cycle,
    planar_path,
    planar_tree,
    quasi_tree_bouquet,
    simple_graph_map,
    star,
    toroidal_grid,
    toroidal_grid_doubled,
    torus_layout,
)

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "LayoutKind",
    "MapLayout",
    "bouquet",
    "circle_layout",
    "dipole",
    "dual_dipole",
    "grid_vertex",
    "heawood_torus",
    "is_quasi_tree_bouquet",
    "k7_torus",
    "planar_cycle",
    "planar_path",
    "planar_tree",
    "quasi_tree_bouquet",
    "simple_graph_map",
    "star",
    "toroidal_grid",
    "toroidal_grid_doubled",
    "torus_layout",
]
