"""
Incidence matrices of a map, indexed by darts (arcs).

    N  arcs x vertices   N[a, v] = 1 iff v is the tail of a
    M  arcs x faces      M[a, f] = 1 iff a lies on face f
    L  arcs x edges      L[a, e] = 1 iff a is one of the two arcs of e
    R  arcs x arcs       arc reversal
    C  vertices x faces  C = N^T M
    D, Delta             vertex and face degree diagonals

All entries are integers; identities are checked in int64.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..errors import ConsistencyError
from ..spectra.rational import RationalMatrix
from .maps import MapStructure


@dataclass(frozen=True)
class IncidenceMatrices:
    """The seven incidence matrices of one map, as exact integer matrices."""

    N: RationalMatrix
    M: RationalMatrix
    L: RationalMatrix
    R: RationalMatrix
    C: RationalMatrix
    D: RationalMatrix
    Delta: RationalMatrix
    vertex_degrees: Tuple[int, ...]
    face_degrees: Tuple[int, ...]

    @property
    def num_arcs(self) -> int:
        return self.N.rows

    @property
    def num_vertices(self) -> int:
        return self.N.cols

    @property
    def num_faces(self) -> int:
        return self.M.cols

    @property
    def num_edges(self) -> int:
        return self.L.cols

    def dual(self) -> "IncidenceMatrices":
        """Incidence of the dual map on the same darts: N and M trade places."""
        return IncidenceMatrices(
            N=self.M,
            M=self.N,
            L=self.L,
            R=self.R,
            C=self.C.T,
            D=self.Delta,
            Delta=self.D,
            vertex_degrees=self.face_degrees,
            face_degrees=self.vertex_degrees,
        )

    def c_hat(self) -> RationalMatrix:
        """
        Rational stand-in for Chat Chat^T.

        Returns ``D^-1 C Delta^-1 C^T``, which is similar to Chat Chat^T and
        rational; its eigenvalues are those of Chat Chat^T.
        """
        d_inv = RationalMatrix.diagonal([Fraction(1, d) for d in self.vertex_degrees])
        delta_inv = RationalMatrix.diagonal([Fraction(1, k) for k in self.face_degrees])
        return d_inv @ self.C @ delta_inv @ self.C.T

    def chat_chat_t(self) -> np.ndarray:
        """Float Chat Chat^T with Chat = D^-1/2 C Delta^-1/2 (symmetric)."""
        c = self.C.to_float()
        dv = np.sqrt(np.asarray(self.vertex_degrees, dtype=np.float64))
        df = np.sqrt(np.asarray(self.face_degrees, dtype=np.float64))
        c_hat = c / dv[:, None] / df[None, :]
        return c_hat @ c_hat.T

    def to_dict(self) -> Dict[str, List[List[int]]]:
        return {
            name: getattr(self, name).to_int_array().tolist()
            for name in ("N", "M", "L", "R", "C", "D", "Delta")
        }


# =============================================================================
# CONSTRUCTION
# =============================================================================


def _indicator(labels, width: int) -> np.ndarray:
    out = np.zeros((len(labels), width), dtype=np.int64)
    out[np.arange(len(labels)), np.asarray(labels, dtype=np.int64)] = 1
    return out


def _dart_adjacency(labels, width: int) -> np.ndarray:
    """Count darts d with labels (d, d^1) = (x, y); built without N, M or R."""
    out = np.zeros((width, width), dtype=np.int64)
    for d, x in enumerate(labels):
        out[x, labels[d ^ 1]] += 1
    return out


def incidence(structure: MapStructure, verify: bool = True) -> IncidenceMatrices:
    """
    Build N, M, L, R, C, D and Delta for a map.

    Args:
        structure: A validated map
        verify: Check every incidence identity exactly

    Returns:
        IncidenceMatrices

    Raises:
        ConsistencyError: an identity fails (face tracing bug)
    """
    arcs = structure.dart_count
    n = _indicator(structure.vertex_of, structure.num_vertices)
    m = _indicator(structure.face_of, structure.num_faces)
    ell = _indicator([structure.edge_of(d) for d in range(arcs)], structure.num_edges)
    r = _indicator([d ^ 1 for d in range(arcs)], arcs)
    c = n.T @ m
    d = np.diag(np.asarray(structure.vertex_degrees, dtype=np.int64))
    delta = np.diag(np.asarray(structure.face_degrees, dtype=np.int64))

    if verify:
        verify_identities(
            n,
            m,
            ell,
            r,
            c,
            d,
            delta,
            vertex_adjacency=_dart_adjacency(structure.vertex_of, structure.num_vertices),
            face_adjacency=_dart_adjacency(structure.face_of, structure.num_faces),
        )

    return IncidenceMatrices(
        N=RationalMatrix(n),
        M=RationalMatrix(m),
        L=RationalMatrix(ell),
        R=RationalMatrix(r),
        C=RationalMatrix(c),
        D=RationalMatrix(d),
        Delta=RationalMatrix(delta),
        vertex_degrees=structure.vertex_degrees,
        face_degrees=structure.face_degrees,
    )


def verify_identities(
    n: np.ndarray,
    m: np.ndarray,
    ell: np.ndarray,
    r: np.ndarray,
    c: np.ndarray,
    d: np.ndarray,
    delta: np.ndarray,
    vertex_adjacency: Optional[np.ndarray] = None,
    face_adjacency: Optional[np.ndarray] = None,
) -> None:
    """
    Raise ConsistencyError unless every incidence identity holds exactly.

    When given, ``vertex_adjacency`` and ``face_adjacency`` are A(X) and A(X*)
    counted straight from the darts; N^T R N and M^T R M must equal them.
    """
    checks = {
        "N rows are standard basis vectors": bool(np.all(n.sum(axis=1) == 1)),
        "M rows are standard basis vectors": bool(np.all(m.sum(axis=1) == 1)),
        "L rows are standard basis vectors": bool(np.all(ell.sum(axis=1) == 1)),
        "N^T N = D": np.array_equal(n.T @ n, d),
        "M^T M = Delta": np.array_equal(m.T @ m, delta),
        "L^T L = 2I": np.array_equal(ell.T @ ell, 2 * np.eye(ell.shape[1], dtype=np.int64)),
        "R = L L^T - I": np.array_equal(r, ell @ ell.T - np.eye(r.shape[0], dtype=np.int64)),
        "N^T R M = C": np.array_equal(n.T @ r @ m, c),
        "M^T R N = C^T": np.array_equal(m.T @ r @ n, c.T),
        "N^T R N symmetric": np.array_equal(n.T @ r @ n, (n.T @ r @ n).T),
    }
    if vertex_adjacency is not None:
        checks["N^T R N = A(X)"] = np.array_equal(n.T @ r @ n, vertex_adjacency)
    if face_adjacency is not None:
        checks["M^T R M = A(X*)"] = np.array_equal(m.T @ r @ m, face_adjacency)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise ConsistencyError(f"incidence identities failed: {', '.join(failed)}")
    logger.debug(f"incidence identities verified ({len(checks)} checks)")


def adjacency(structure: MapStructure) -> np.ndarray:
    """A(X) from the darts: one count per arc, so loops count twice on the diagonal."""
    return _dart_adjacency(structure.vertex_of, structure.num_vertices)


def dual_adjacency(structure: MapStructure) -> np.ndarray:
    """A(X*) from the darts, by face of each arc and of its reversal."""
    return _dart_adjacency(structure.face_of, structure.num_faces)
