#!/usr/bin/env python3
"""
Deterministic generators for the standard map families.

Every generator returns a validated MapStructure built from explicit rotation
lists, so emitting it as ``.rotmap`` and parsing it back gives an identical
structure. Dart conventions follow ``mapwalk.core.maps``: edge e owns darts
2e and 2e+1, and dart 2e leaves the first endpoint.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..core.maps import MapStructure, build_map, dual
from ..errors import MapValidationError

Edge = Tuple[int, int]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise MapValidationError(message)


# =============================================================================
# TWO-VERTEX AND SINGLE-VERTEX FAMILIES
# =============================================================================


def dipole(n: int) -> MapStructure:
    """
    The dipole X_n: two vertices u, v joined by n edges, same rotation at both.

    Edge e runs from u (dart 2e) to v (dart 2e+1). Odd n gives a single face
    and genus (n-1)/2; even n gives two faces and genus (n-2)/2.
    """
    _require(n >= 1, f"dipole needs n >= 1, got {n}")
    return build_map([[2 * e for e in range(n)], [2 * e + 1 for e in range(n)]])


def dual_dipole(n: int) -> MapStructure:
    """The dual of X_n, renumbered canonically."""
    return build_map(dual(dipole(n)).rotation_lists)


def bouquet(word: Union[str, Sequence[int]]) -> MapStructure:
    """
    A single vertex whose rotation is ``word``.

    Example:
        >>> bouquet("0 2 1 3").genus
        1
    """
    if isinstance(word, str):
        try:
            darts = [int(token) for token in word.replace(",", " ").split()]
        except ValueError:
            raise MapValidationError(f"bouquet word must be integers, got {word!r}") from None
    else:
        darts = [int(d) for d in word]
    _require(len(darts) >= 2, "bouquet needs at least one loop")
    return build_map([darts])


def quasi_tree_bouquet(genus: int) -> MapStructure:
    """One vertex and one face: the word a1 b1 a1^-1 b1^-1 ... on darts."""
    _require(genus >= 1, f"quasi_tree_bouquet needs genus >= 1, got {genus}")
    word: List[int] = []
    for i in range(genus):
        word.extend((4 * i, 4 * i + 2, 4 * i + 1, 4 * i + 3))
    structure = build_map([word])
    if not is_quasi_tree_bouquet(structure):
        raise MapValidationError(f"word for genus {genus} does not close to one face")
    return structure


def is_quasi_tree_bouquet(structure: MapStructure) -> bool:
    return structure.num_vertices == 1 and structure.num_faces == 1


# =============================================================================
# PLANAR FAMILIES
# =============================================================================


def planar_cycle(n: int) -> MapStructure:
    """The cycle C_n on the sphere; edge i joins i to i+1."""
    _require(n >= 3, f"planar_cycle needs n >= 3, got {n}")
    return build_map([[2 * i, 2 * ((i - 1) % n) + 1] for i in range(n)])


def planar_tree(edges: Sequence[Edge]) -> MapStructure:
    """
    A tree in the plane; each vertex lists its darts in edge order.

    Raises:
        MapValidationError: not a tree, or vertex ids not 0..|V|-1
    """
    _require(len(edges) >= 1, "planar_tree needs at least one edge")
    vertices = sorted({v for edge in edges for v in edge})
    _require(
        vertices == list(range(len(vertices))), f"tree vertices must be 0..n-1, got {vertices}"
    )
    _require(len(edges) == len(vertices) - 1, f"{len(edges)} edges on {len(vertices)} vertices")
    rotation: List[List[int]] = [[] for _ in vertices]
    for k, (u, v) in enumerate(edges):
        _require(u != v, f"edge {k} is a loop")
        rotation[u].append(2 * k)
        rotation[v].append(2 * k + 1)
    structure = build_map(rotation)
    _require(structure.num_faces == 1, "edge list is not a tree")
    return structure


def planar_path(n: int) -> MapStructure:
    """The path P_n on n vertices."""
    _require(n >= 2, f"planar_path needs n >= 2, got {n}")
    return planar_tree([(i, i + 1) for i in range(n - 1)])


def star(n: int) -> MapStructure:
    """K_{1,n} in the plane; vertex 0 is the centre."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return build_map([[2 * i for i in range(n)]] + [[2 * i + 1] for i in range(n)])


# =============================================================================
# TOROIDAL FAMILIES
# =============================================================================


def toroidal_grid(n: int, m: int) -> MapStructure:
    """
    The toroidal (n, m)-grid with row-major vertex ids v = a*m + b.

    Vertex (a, b) owns the right edge 2v (darts 4v from (a,b), 4v+1 into
    (a,b+1)) and the down edge 2v+1 (darts 4v+2, 4v+3 into (a+1,b)). Its
    rotation is (a,b)_R, (a,b)_D, (a,b-1)_R, (a-1,b)_D.
    """
    _require(n >= 1 and m >= 1, f"toroidal_grid needs n, m >= 1, got ({n}, {m})")

    def idx(a: int, b: int) -> int:
        return (a % n) * m + (b % m)

    rotation = []
    for a in range(n):
        for b in range(m):
            v = idx(a, b)
            rotation.append([4 * v, 4 * v + 2, 4 * idx(a, b - 1) + 1, 4 * idx(a - 1, b) + 3])
    return build_map(rotation)


def toroidal_grid_doubled(m: int) -> MapStructure:
    """
    Y_m: the (1, m)-grid with every non-loop edge replaced by a digon.

    Vertex b owns R_b (edge 3b), its parallel copy R'_b (edge 3b+1) and the
    loop D_b (edge 3b+2).
    """
    _require(m >= 2, f"toroidal_grid_doubled needs m >= 2, got {m}")
    rotation = []
    for b in range(m):
        base, prev = 6 * b, 6 * ((b - 1) % m)
        rotation.append([base, base + 2, base + 4, prev + 3, prev + 1, base + 5])
    return build_map(rotation)


def simple_graph_map(neighbour_rotations: Sequence[Sequence[int]]) -> MapStructure:
    """
    Map of a simple graph from neighbour rotations.

    Edges are numbered on first appearance, scanning vertices in order; dart
    2e leaves the vertex that saw edge e first.
    """
    edge_ids: Dict[Tuple[int, int], int] = {}
    rotation: List[List[int]] = []
    for v, neighbours in enumerate(neighbour_rotations):
        darts = []
        for w in neighbours:
            key = (min(v, w), max(v, w))
            _require(v != w, f"vertex {v} lists itself")
            if key not in edge_ids:
                edge_ids[key] = len(edge_ids)
                darts.append(2 * edge_ids[key])
            else:
                darts.append(2 * edge_ids[key] + 1)
        rotation.append(darts)
    return build_map(rotation)


def k7_torus() -> MapStructure:
    """The triangular embedding of K_7 in the torus (14 triangles)."""
    offsets = (1, 3, 2, 6, 4, 5)
    return simple_graph_map([[(i + k) % 7 for k in offsets] for i in range(7)])


def heawood_torus() -> MapStructure:
    """The Heawood graph on the torus, as the dual of :func:`k7_torus`.

    Heawood vertex i is K_7 face i.
    """
    return build_map(dual(k7_torus()).rotation_lists)


# =============================================================================
# LAYOUT
# =============================================================================


class LayoutKind(Enum):
    TORUS = "torus"
    CIRCLE = "circle"


@dataclass(frozen=True)
class MapLayout:
    """Vertex positions for drawing; torus layouts carry (rows, cols)."""

    kind: LayoutKind
    positions: np.ndarray
    torus_shape: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "positions": self.positions.round(6).tolist(),
            "torus_shape": list(self.torus_shape) if self.torus_shape else None,
        }


def circle_layout(num_vertices: int) -> MapLayout:
    angles = 2 * np.pi * np.arange(num_vertices) / max(num_vertices, 1) + np.pi / 2
    return MapLayout(
        kind=LayoutKind.CIRCLE, positions=np.column_stack([np.cos(angles), np.sin(angles)])
    )


def torus_layout(n: int, m: int) -> MapLayout:
    """Cut-open torus: vertex (a, b) sits at column b, row a (row 0 on top)."""
    positions = np.array([[b, -a] for a in range(n) for b in range(m)], dtype=np.float64)
    return MapLayout(kind=LayoutKind.TORUS, positions=positions, torus_shape=(n, m))


# =============================================================================
# FAMILY SPEC
# =============================================================================


@dataclass(frozen=True)
class _Family:
    builder: Callable[..., MapStructure]
    arity: int
    description: str


FAMILIES: Dict[str, _Family] = {
    "dipole": _Family(dipole, 1, "dipole X_n"),
    "grid": _Family(toroidal_grid, 2, "toroidal (n,m)-grid"),
    "grid_doubled": _Family(toroidal_grid_doubled, 1, "doubled (1,m)-grid Y_m"),
    "cycle": _Family(planar_cycle, 1, "cycle C_n on the sphere"),
    "path_tree": _Family(planar_path, 1, "path P_n in the plane"),
    "star": _Family(star, 1, "star K_{1,n} in the plane"),
    "bouquet": _Family(bouquet, -1, "single-vertex bouquet from a dart word"),
    "quasi_tree_bouquet": _Family(quasi_tree_bouquet, 1, "one-vertex one-face bouquet"),
    "dual_dipole": _Family(dual_dipole, 1, "dual of X_n"),
    "k7_torus": _Family(k7_torus, 0, "K_7 on the torus"),
    "heawood": _Family(heawood_torus, 0, "Heawood graph on the torus"),
}

_ALIASES = {"k7": "k7_torus", "heawood_torus": "heawood", "path": "path_tree"}


@dataclass(frozen=True)
class FamilySpec:
    """
    A named family plus its parameters.

    Example:
        >>> spec = FamilySpec.parse("grid-doubled", ["5"])
        >>> spec.build().num_vertices
        5
    """

    name: str
    params: Tuple[int, ...] = ()
    word: Optional[Tuple[int, ...]] = field(default=None)

    @classmethod
    def parse(cls, name: str, params: Sequence[str]) -> "FamilySpec":
        key = name.strip().lower().replace("-", "_")
        key = _ALIASES.get(key, key)
        if key not in FAMILIES:
            raise MapValidationError(
                f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}"
            )
        tokens = [tok for param in params for tok in str(param).replace(",", " ").split()]
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise MapValidationError(f"{key} parameters must be integers, got {tokens}") from None

        if key == "bouquet":
            return cls(name=key, word=values)
        arity = FAMILIES[key].arity
        if len(values) != arity:
            raise MapValidationError(f"{key} takes {arity} parameter(s), got {len(values)}")
        return cls(name=key, params=values)

    def build(self) -> MapStructure:
        family = FAMILIES[self.name]
        if self.name == "bouquet":
            structure = family.builder(self.word)
        else:
            structure = family.builder(*self.params)
        logger.info(f"Generated {self.label}: {structure!r}")
        return structure

    @property
    def label(self) -> str:
        args = self.word if self.name == "bouquet" else self.params
        return f"{self.name}({', '.join(str(a) for a in args or ())})"

    @property
    def grid_shape(self) -> Optional[Tuple[int, int]]:
        if self.name == "grid":
            return (self.params[0], self.params[1])
        if self.name == "grid_doubled":
            return (1, self.params[0])
        return None

    def layout(self, structure: Optional[MapStructure] = None) -> MapLayout:
        shape = self.grid_shape
        if shape is not None:
            return torus_layout(*shape)
        structure = structure or self.build()
        return circle_layout(structure.num_vertices)

    def vertex_id(self, token: str) -> int:
        """Resolve ``"7"`` or, for grid families, ``"a,b"`` to a vertex id."""
        text = token.strip()
        if "," in text:
            shape = self.grid_shape
            if shape is None:
                raise MapValidationError(f"'a,b' vertex ids need a grid family, got {self.name}")
            try:
                a, b = (int(part) for part in text.split(","))
            except ValueError:
                raise MapValidationError(f"bad grid vertex {token!r}") from None
            n, m = shape
            if not (0 <= a < n and 0 <= b < m):
                raise MapValidationError(f"grid vertex ({a},{b}) outside {n}x{m}")
            return a * m + b
        try:
            return int(text)
        except ValueError:
            raise MapValidationError(f"bad vertex id {token!r}") from None

    def to_dict(self) -> Dict:
        return {"name": self.name, "params": list(self.word or self.params)}


def grid_vertex(m: int, a: int, b: int) -> int:
    """Row-major id of grid vertex (a, b) in a grid with m columns."""
    return a * m + b

