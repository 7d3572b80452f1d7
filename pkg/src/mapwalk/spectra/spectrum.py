#!/usr/bin/env python3
"""
Eigenvalues of the walk operator assembled from Chat Chat^T.

With Chat = D^-1/2 C Delta^-1/2, the arc space splits into:
    - the +1 eigenspace, of dimension |E| + 2g;
    - the -1 eigenspace, of dimension |V| + |F| - 2 rank(C);
    - one 2-dimensional block per eigenvalue l of Chat Chat^T strictly
      between 0 and 1, on which U has the roots of t^2 - (4l - 2)t + 1.

rank(C) is exact, so the number of zero eigenvalues and the block count are
never decided by a float threshold.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..config import MapwalkSettings, default_settings
from ..core.incidence import IncidenceMatrices
from ..core.maps import MapStructure, map_profile
from ..errors import ConsistencyError, PreconditionError
from .eigen import group_eigenvalues, symmetric_eigs
from .polynomial import IntegerPolynomial, rational_eigenvalues
from .rational import RationalMatrix

if TYPE_CHECKING:
    from ..walk.operator import WalkOperator


@dataclass(frozen=True)
class ChatEigenvalue:
    value: float
    multiplicity: int
    vectors: np.ndarray = field(repr=False)

    def to_dict(self) -> Dict:
        return {"value": round(self.value, 12), "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class UEigenvalue:
    """Eigenvalue of U on the unit circle; ``source`` is the l it came from."""

    value: complex
    multiplicity: int
    source: Optional[float] = None

    @property
    def angle(self) -> float:
        return float(np.angle(self.value))

    def to_dict(self) -> Dict:
        return {
            "re": round(self.value.real, 12),
            "im": round(self.value.imag, 12),
            "multiplicity": self.multiplicity,
            "source": None if self.source is None else round(self.source, 12),
        }


@dataclass(frozen=True)
class SpectralData:
    """
    Spectral summary of one map.

    Attributes:
        chat_eigs: Clustered eigenvalues of Chat Chat^T with eigenvectors
        u_eigs: Eigenvalues of U with multiplicities summing to |A|
        dims: (dim of +1 eigenspace, dim of -1 eigenspace)
        rank_c: Exact rank of C
        rational_chat: Exact eigenvalues of Chat Chat^T when all are rational
    """

    chat_eigs: Tuple[ChatEigenvalue, ...]
    u_eigs: Tuple[UEigenvalue, ...]
    dims: Tuple[int, int]
    rank_c: int
    rational_chat: Optional[Tuple[Fraction, ...]] = None

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.u_eigs)

    @property
    def has_minus_one(self) -> bool:
        return self.dims[1] > 0

    @property
    def trace(self) -> float:
        return float(sum(e.value.real * e.multiplicity for e in self.u_eigs))

    def to_dict(self) -> Dict:
        return {
            "dim_plus1": self.dims[0],
            "dim_minus1": self.dims[1],
            "rank_c": self.rank_c,
            "chat_eigs": [e.to_dict() for e in self.chat_eigs],
            "u_eigs": [e.to_dict() for e in self.u_eigs],
            "rational_chat": (
                None if self.rational_chat is None else [str(x) for x in self.rational_chat]
            ),
        }


# =============================================================================
# ASSEMBLY
# =============================================================================


def u_spectrum(
    structure: MapStructure,
    mats: IncidenceMatrices,
    settings: Optional[MapwalkSettings] = None,
) -> SpectralData:
    """
    Eigenvalues of U with multiplicities, from Chat Chat^T and exact rank(C).

    Raises:
        ConsistencyError: float eigenvalues contradict the exact rank, or the
            multiplicities do not sum to the number of arcs
    """
    settings = settings or default_settings()
    rank_c = mats.C.rank()
    n_v, n_f = structure.num_vertices, structure.num_faces
    dim_plus = structure.num_edges + 2 * structure.genus
    dim_minus = n_v + n_f - 2 * rank_c

    pairs = symmetric_eigs(mats.chat_chat_t(), tol=settings.tol)
    values = pairs.values
    zeros = n_v - rank_c
    tolerance = max(settings.cluster_radius, 1e3 * settings.tol)
    if np.any(np.abs(values[:zeros]) > tolerance) or abs(values[-1] - 1.0) > tolerance:
        raise ConsistencyError(
            f"Chat Chat^T spectrum {values.round(9).tolist()} contradicts rank(C) = {rank_c}"
        )
    middle = values[zeros:-1]
    if np.any((middle <= tolerance) | (middle >= 1.0 - tolerance)):
        raise ConsistencyError("an interior Chat Chat^T eigenvalue sits at 0 or 1")

    chat_eigs = [
        ChatEigenvalue(c.value, c.multiplicity, pairs.vectors[:, list(c.indices)])
        for c in group_eigenvalues(values, settings.cluster_radius)
    ]

    u_eigs = [UEigenvalue(1 + 0j, dim_plus, source=1.0)]
    if dim_minus:
        u_eigs.append(UEigenvalue(-1 + 0j, dim_minus, source=None))
    for cluster in group_eigenvalues(middle, settings.cluster_radius):
        phi = float(np.arccos(np.clip(2.0 * cluster.value - 1.0, -1.0, 1.0)))
        for sign in (1.0, -1.0):
            root = complex(np.cos(phi), sign * np.sin(phi))
            u_eigs.append(UEigenvalue(root, cluster.multiplicity, cluster.value))

    total = sum(e.multiplicity for e in u_eigs)
    if total != structure.dart_count:
        raise ConsistencyError(f"U multiplicities sum to {total}, expected {structure.dart_count}")

    all_rational, roots = rational_eigenvalues(mats.c_hat(), approximations=values)
    logger.debug(
        f"u_spectrum: rank(C)={rank_c}, dims=({dim_plus}, {dim_minus}), "
        f"{len(u_eigs)} distinct, rational={all_rational}"
    )
    return SpectralData(
        chat_eigs=tuple(chat_eigs),
        u_eigs=tuple(u_eigs),
        dims=(dim_plus, dim_minus),
        rank_c=rank_c,
        rational_chat=tuple(roots) if all_rational else None,
    )


# =============================================================================
# TRACES AND EIGENSPACES
# =============================================================================


def trace_formula(mats: IncidenceMatrices) -> Fraction:
    """tr U = 4 tr(PQ) - 2|F| - 2|V| + |A| with tr(PQ) = sum C(v,f)^2 / (d_v deg f)."""
    c = mats.C.to_int_array()
    tr_pq = Fraction(0)
    for v, d_v in enumerate(mats.vertex_degrees):
        for f, d_f in enumerate(mats.face_degrees):
            if c[v, f]:
                tr_pq += Fraction(int(c[v, f]) ** 2, d_v * d_f)
    return 4 * tr_pq - 2 * mats.num_faces - 2 * mats.num_vertices + mats.num_arcs


def uniform_type_trace(structure: MapStructure) -> Optional[Fraction]:
    """4 alpha |V| / k - 2|F| - 2|V| + |A| for type (k, d) maps with multiplicity alpha."""
    profile = map_profile(structure)
    if profile.map_type is None or profile.multiplicity is None:
        return None
    k = profile.face_degree
    return (
        Fraction(4 * profile.multiplicity * structure.num_vertices, k)
        - 2 * structure.num_faces
        - 2 * structure.num_vertices
        + structure.dart_count
    )


def float_eigenspace_dimensions(u: np.ndarray, tol: float = 1e-7) -> Tuple[int, int]:
    """Numerical dims of ker(U - I) and ker(U + I) from singular values."""
    identity = np.eye(u.shape[0])
    dims = []
    for shift in (identity, -identity):
        singular = np.linalg.svd(u - shift, compute_uv=False)
        dims.append(int(np.sum(singular <= tol)))
    return dims[0], dims[1]


def exact_eigenspace_dimensions(u: RationalMatrix) -> Tuple[int, int]:
    """Exact dims of ker(U - I) and ker(U + I)."""
    identity = RationalMatrix.identity(u.rows)
    return u.rows - (u - identity).rank(), u.rows - (u + identity).rank()


def root_polynomial(lam: Fraction) -> IntegerPolynomial:
    """t^2 - (4l - 2)t + 1, cleared to a primitive integer polynomial."""
    lam = Fraction(lam)
    middle = 4 * lam - 2
    den = middle.denominator
    return IntegerPolynomial((den, -middle.numerator, den)).primitive()


def verify_root_space(op: "WalkOperator", lam: Fraction) -> bool:
    """
    Exact check that p(U) kills the block spanned by N w and P N w.

    w runs over a basis of the null space of D^-1 C Delta^-1 C^T - l I, which
    is similar to Chat Chat^T, and p(t) = t^2 - (4l - 2)t + 1.

    Raises:
        PreconditionError: l is 0, 1 or not an eigenvalue
    """
    lam = Fraction(lam)
    if lam in (0, 1):
        raise PreconditionError(f"root-space check needs l outside {{0, 1}}, got {lam}")
    mats = op.incidence
    kernel = (mats.c_hat() - RationalMatrix.identity(mats.num_vertices) * lam).nullspace()
    if kernel.cols == 0:
        raise PreconditionError(f"{lam} is not an eigenvalue of Chat Chat^T")

    middle = 4 * lam - 2
    for block in (mats.N @ kernel, op.P @ mats.N @ kernel):
        u_block = op.U @ block
        residual = op.U @ u_block - u_block * middle + block
        if not residual.is_zero():
            logger.warning(f"root space for l={lam} is not annihilated by {root_polynomial(lam)}")
            return False
    return True


def advisory_root_orders(
    spectral: SpectralData, num_vertices: int, num_faces: int, tol: float = 1e-7
) -> List[int]:
    """
    Orders s' of roots of unity among the eigenvalues of U (float estimate).

    Each eigenvalue angle is rationalized with denominator at most
    8 min(|V|, |F|)^2; eigenvalues that are not roots of unity are skipped.
    """
    bound = 8 * min(num_vertices, num_faces) ** 2
    orders = set()
    for eig in spectral.u_eigs:
        turn = (eig.angle / (2 * np.pi)) % 1.0
        approx = Fraction(turn).limit_denominator(bound)
        if abs(float(approx) - turn) <= tol:
            orders.add(approx.denominator)
    return sorted(orders)
