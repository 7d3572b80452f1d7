#!/usr/bin/env python3
"""
Orientable maps as dart-based rotation systems.

Darts 2e and 2e+1 are the two arcs of edge e and ``reversal(d) = d ^ 1``.
``rotation(d)`` is the next dart clockwise around the tail of d, and faces are
the orbits of the face successor ``phi(d) = rotation(reversal(d))``.

Numbering:
    - vertex ids follow the order of the rotation lists;
    - face ids follow the order of first appearance when darts are scanned
      vertex by vertex in rotation order.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import MapValidationError

DartLists = Tuple[Tuple[int, ...], ...]


# =============================================================================
# MAP STRUCTURE
# =============================================================================


def _rotation_permutation(lists: DartLists) -> Tuple[int, ...]:
    darts = [d for cycle in lists for d in cycle]
    n = len(darts)
    if n == 0:
        raise MapValidationError("map has no darts")
    if n % 2:
        raise MapValidationError(f"odd dart count {n}")
    if any(len(cycle) == 0 for cycle in lists):
        raise MapValidationError("empty rotation list (isolated vertex)")

    counts = Counter(darts)
    duplicates = sorted(d for d, c in counts.items() if c > 1)
    if duplicates:
        raise MapValidationError(f"duplicate dart(s) {duplicates[:8]}")
    missing = sorted(set(range(n)) - set(counts))
    if missing:
        raise MapValidationError(f"missing dart(s) {missing[:8]} (darts must be 0..{n - 1})")

    rotation = [0] * n
    for cycle in lists:
        for i, d in enumerate(cycle):
            rotation[d] = cycle[(i + 1) % len(cycle)]
    return tuple(rotation)


def _orbit_labels(lists: DartLists, n: int, what: str) -> Tuple[int, ...]:
    labels = [-1] * n
    for label, cycle in enumerate(lists):
        for d in cycle:
            if not 0 <= d < n:
                raise MapValidationError(f"{what} {label} references unknown dart {d}")
            if labels[d] != -1:
                raise MapValidationError(f"dart {d} appears in two {what}s")
            labels[d] = label
    if -1 in labels:
        raise MapValidationError(f"dart {labels.index(-1)} lies in no {what}")
    return tuple(labels)


@dataclass(frozen=True)
class MapStructure:
    """
    An orientable map given by its rotation lists and facial dart cycles.

    ``face_lists[f]`` is the face f traced by ``phi`` from its first dart.
    Everything else is derived and validated on construction.
    """

    rotation_lists: DartLists
    face_lists: DartLists
    dart_count: int = field(init=False)
    rotation: Tuple[int, ...] = field(init=False, repr=False)
    vertex_of: Tuple[int, ...] = field(init=False, repr=False)
    face_of: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        rotation_lists = tuple(tuple(int(d) for d in cycle) for cycle in self.rotation_lists)
        face_lists = tuple(tuple(int(d) for d in cycle) for cycle in self.face_lists)
        object.__setattr__(self, "rotation_lists", rotation_lists)
        object.__setattr__(self, "face_lists", face_lists)

        rotation = _rotation_permutation(rotation_lists)
        n = len(rotation)
        object.__setattr__(self, "dart_count", n)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "vertex_of", _orbit_labels(rotation_lists, n, "vertex"))
        object.__setattr__(self, "face_of", _orbit_labels(face_lists, n, "face"))

        for f, cycle in enumerate(face_lists):
            for i, d in enumerate(cycle):
                if self.phi(d) != cycle[(i + 1) % len(cycle)]:
                    raise MapValidationError(f"face {f} is not a face-successor orbit at dart {d}")

        self._check_connected()
        if self.euler_characteristic > 2 or self.euler_characteristic % 2:
            raise MapValidationError(
                f"Euler characteristic {self.euler_characteristic} is not 2 - 2g"
            )

    def _check_connected(self) -> None:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for nxt in (self.rotation[d], d ^ 1):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != self.dart_count:
            raise MapValidationError(
                f"map is disconnected ({len(seen)} of {self.dart_count} darts reachable)"
            )

    # -------------------------------------------------------------------------
    # Dart permutations
    # -------------------------------------------------------------------------

    @staticmethod
    def reversal(dart: int) -> int:
        return dart ^ 1

    @staticmethod
    def edge_of(dart: int) -> int:
        return dart // 2

    def phi(self, dart: int) -> int:
        """Face successor: rotation after reversal."""
        return self.rotation[dart ^ 1]

    def tail(self, dart: int) -> int:
        return self.vertex_of[dart]

    def head(self, dart: int) -> int:
        return self.vertex_of[dart ^ 1]

    # -------------------------------------------------------------------------
    # Counts
    # -------------------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.rotation_lists)

    @property
    def num_edges(self) -> int:
        return self.dart_count // 2

    @property
    def num_faces(self) -> int:
        return len(self.face_lists)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    @property
    def vertex_degrees(self) -> Tuple[int, ...]:
        return tuple(len(cycle) for cycle in self.rotation_lists)

    @property
    def face_degrees(self) -> Tuple[int, ...]:
        return tuple(len(cycle) for cycle in self.face_lists)

    def summary(self) -> Dict[str, int]:
        return {
            "vertices": self.num_vertices,
            "edges": self.num_edges,
            "faces": self.num_faces,
            "genus": self.genus,
            "darts": self.dart_count,
        }

    def __repr__(self) -> str:
        return (
            f"MapStructure(V={self.num_vertices}, E={self.num_edges}, "
            f"F={self.num_faces}, g={self.genus})"
        )


# =============================================================================
# CONSTRUCTION
# =============================================================================


def trace_faces(rotation_lists: Sequence[Sequence[int]]) -> DartLists:
    """Face cycles numbered by first appearance in vertex-then-rotation order."""
    lists = tuple(tuple(int(d) for d in cycle) for cycle in rotation_lists)
    rotation = _rotation_permutation(lists)
    seen = [False] * len(rotation)
    faces: List[Tuple[int, ...]] = []
    for cycle in lists:
        for start in cycle:
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = rotation[d ^ 1]
            faces.append(tuple(walk))
    return tuple(faces)


def build_map(rotation_lists: Sequence[Sequence[int]]) -> MapStructure:
    """
    Build a map from per-vertex clockwise dart lists.

    Args:
        rotation_lists: ``rotation_lists[v]`` lists the darts with tail v in
            clockwise order; darts must be exactly 0..2|E|-1

    Returns:
        Validated MapStructure

    Raises:
        MapValidationError: duplicate/missing dart, odd dart count, or a
            disconnected map
    """
    faces = trace_faces(rotation_lists)
    structure = MapStructure(rotation_lists=tuple(map(tuple, rotation_lists)), face_lists=faces)
    logger.debug(f"Built {structure!r}")
    return structure


def dual(structure: MapStructure) -> MapStructure:
    """
    The dual map on the same darts.

    The dual rotation is the face successor, so dual vertex f is primal face f
    and dual face v is primal vertex v; ``dual(dual(X)) == X``.
    """
    return MapStructure(rotation_lists=structure.face_lists, face_lists=structure.rotation_lists)


def canonical(structure: MapStructure) -> MapStructure:
    """Rebuild from the rotation lists so face ids follow first appearance."""
    return build_map(structure.rotation_lists)


def mirror(structure: MapStructure) -> MapStructure:
    """The mirror image: every rotation reversed."""
    return build_map([tuple(reversed(cycle)) for cycle in structure.rotation_lists])


def facial_walks(structure: MapStructure) -> List[List[Tuple[int, int]]]:
    """Each facial walk as its (vertex, edge) sequence."""
    return [[(structure.tail(d), d // 2) for d in cycle] for cycle in structure.face_lists]


def vertex_face_counts(structure: MapStructure) -> List[List[int]]:
    """How many times each vertex appears on each facial walk."""
    counts = [[0] * structure.num_faces for _ in range(structure.num_vertices)]
    for f, cycle in enumerate(structure.face_lists):
        for d in cycle:
            counts[structure.tail(d)][f] += 1
    return counts


# =============================================================================
# PROFILE
# =============================================================================


@dataclass(frozen=True)
class MapProfile:
    """Degree uniformity and incidence multiplicity of a map."""

    vertex_degree: Optional[int]
    face_degree: Optional[int]
    multiplicity: Optional[int]
    is_circular: bool

    @property
    def map_type(self) -> Optional[Tuple[int, int]]:
        """(k, d): face degree k and vertex degree d, when both are uniform."""
        if self.vertex_degree is None or self.face_degree is None:
            return None
        return (self.face_degree, self.vertex_degree)

    def to_dict(self) -> Dict:
        return {
            "vertex_degree": self.vertex_degree,
            "face_degree": self.face_degree,
            "type": list(self.map_type) if self.map_type else None,
            "multiplicity": self.multiplicity,
            "circular": self.is_circular,
        }


def map_profile(structure: MapStructure) -> MapProfile:
    """Report uniform degrees, incidence multiplicity alpha and circularity."""
    vdeg = set(structure.vertex_degrees)
    fdeg = set(structure.face_degrees)
    nonzero = {c for row in vertex_face_counts(structure) for c in row if c}
    alpha = next(iter(nonzero)) if len(nonzero) == 1 else None
    circular = alpha == 1 and min(structure.face_degrees) >= 3
    return MapProfile(
        vertex_degree=vdeg.pop() if len(vdeg) == 1 else None,
        face_degree=fdeg.pop() if len(fdeg) == 1 else None,
        multiplicity=alpha,
        is_circular=circular,
    )
