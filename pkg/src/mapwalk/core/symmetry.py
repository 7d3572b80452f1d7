"""
Map automorphisms by dart propagation.

An orientation-preserving automorphism is a dart bijection sigma commuting
with rotation and reversal. Connectivity means sigma is determined by sigma(0), so
each of the 2|E| candidate images is tested by one propagation pass.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..errors import ConsistencyError
from .incidence import incidence
from .maps import MapStructure


@dataclass(frozen=True)
class Automorphism:
    """A dart permutation together with the permutations it induces."""

    darts: Tuple[int, ...]
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    faces: Optional[Tuple[int, ...]]
    orientation_preserving: bool = True

    @property
    def is_identity(self) -> bool:
        return all(i == d for i, d in enumerate(self.darts))

    def arc_matrix(self) -> np.ndarray:
        """Permutation matrix with pi[sigma(a), a] = 1."""
        return _permutation_matrix(self.darts)

    def vertex_matrix(self) -> np.ndarray:
        return _permutation_matrix(self.vertices)

    def edge_matrix(self) -> np.ndarray:
        return _permutation_matrix(self.edges)

    def face_matrix(self) -> Optional[np.ndarray]:
        return None if self.faces is None else _permutation_matrix(self.faces)


def _permutation_matrix(perm: Tuple[int, ...]) -> np.ndarray:
    n = len(perm)
    out = np.zeros((n, n), dtype=np.int64)
    out[np.asarray(perm, dtype=np.int64), np.arange(n)] = 1
    return out


def _propagate(
    structure: MapStructure, image: int, target_rotation: Callable[[int], int]
) -> Optional[List[int]]:
    n = structure.dart_count
    sigma = [-1] * n
    sigma[0] = image
    stack = [0]
    while stack:
        d = stack.pop()
        for src, dst in (
            (structure.rotation[d], target_rotation(sigma[d])),
            (d ^ 1, sigma[d] ^ 1),
        ):
            if sigma[src] == -1:
                sigma[src] = dst
                stack.append(src)
            elif sigma[src] != dst:
                return None
    if len(set(sigma)) != n:
        return None
    return sigma


def _induced(structure: MapStructure, sigma: List[int], with_faces: bool) -> Automorphism:
    vertices = [0] * structure.num_vertices
    for d, image in enumerate(sigma):
        vertices[structure.tail(d)] = structure.tail(image)
    edges = [0] * structure.num_edges
    for d, image in enumerate(sigma):
        edges[d // 2] = image // 2
    faces = None
    if with_faces:
        face_perm = [0] * structure.num_faces
        for d, image in enumerate(sigma):
            face_perm[structure.face_of[d]] = structure.face_of[image]
        faces = tuple(face_perm)
    return Automorphism(
        darts=tuple(sigma),
        vertices=tuple(vertices),
        edges=tuple(edges),
        faces=faces,
        orientation_preserving=with_faces,
    )


def automorphisms(structure: MapStructure) -> List[Automorphism]:
    """
    All orientation-preserving automorphisms, ordered by the image of dart 0.

    Each returned automorphism satisfies pi_A N = N pi_V, pi_A M = M pi_F and
    pi_A L = L pi_E.
    """
    rotation = structure.rotation
    found = []
    for image in range(structure.dart_count):
        if structure.vertex_degrees[structure.tail(0)] != structure.vertex_degrees[
            structure.tail(image)
        ]:
            continue
        sigma = _propagate(structure, image, lambda d: rotation[d])
        if sigma is not None:
            found.append(_induced(structure, sigma, with_faces=True))
    logger.debug(f"{len(found)} orientation-preserving automorphism(s)")
    return found


def reflections(structure: MapStructure) -> List[Automorphism]:
    """Orientation-reversing automorphisms: isomorphisms onto the mirror map."""
    inverse = [0] * structure.dart_count
    for d, nxt in enumerate(structure.rotation):
        inverse[nxt] = d
    found = []
    for image in range(structure.dart_count):
        sigma = _propagate(structure, image, lambda d: inverse[d])
        if sigma is not None:
            found.append(_induced(structure, sigma, with_faces=False))
    return found


def verify_automorphism(structure: MapStructure, auto: Automorphism) -> None:
    """Check the commuting relations with N, M and L exactly."""
    mats = incidence(structure, verify=False)
    n, m, ell = (mats.N.to_int_array(), mats.M.to_int_array(), mats.L.to_int_array())
    pa = auto.arc_matrix()
    ok = np.array_equal(pa @ n, n @ auto.vertex_matrix()) and np.array_equal(
        pa @ ell, ell @ auto.edge_matrix()
    )
    face_matrix = auto.face_matrix()
    if face_matrix is not None:
        ok = ok and np.array_equal(pa @ m, m @ face_matrix)
    if not ok:
        raise ConsistencyError(f"dart map {auto.darts[:8]}... does not commute with incidence")


def vertex_orbits(structure: MapStructure, autos: List[Automorphism]) -> List[List[int]]:
    """Orbits of the vertex action, each sorted, ordered by smallest member."""
    parent = list(range(structure.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for auto in autos:
        for v, w in enumerate(auto.vertices):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: Dict[int, List[int]] = {}
    for v in range(structure.num_vertices):
        orbits.setdefault(find(v), []).append(v)
    return [orbits[k] for k in sorted(orbits)]


@dataclass(frozen=True)
class SymmetrySummary:
    group_order: int
    vertex_transitive: bool
    orientably_regular: bool
    reflexible: bool
    chiral: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "group_order": self.group_order,
            "vertex_transitive": self.vertex_transitive,
            "orientably_regular": self.orientably_regular,
            "reflexible": self.reflexible,
            "chiral": self.chiral,
        }


def symmetry_summary(
    structure: MapStructure, autos: Optional[List[Automorphism]] = None
) -> SymmetrySummary:
    autos = automorphisms(structure) if autos is None else autos
    regular = len(autos) == structure.dart_count
    reflexible = regular and bool(reflections(structure))
    return SymmetrySummary(
        group_order=len(autos),
        vertex_transitive=len(vertex_orbits(structure, autos)) == 1,
        orientably_regular=regular,
        reflexible=reflexible,
        chiral=regular and not reflexible,
    )
