#!/usr/bin/env python3
"""
Transfer detectors: PST, periodicity, U^s = I, strong cospectrality and the
variant transfers.

Every yes/no answer except strong cospectrality is an exact rational
equality on B'_t = N^T U^t N or on exact columns U^t N e_u.
"""

from fractions import Fraction
from math import factorial, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from ..config import MapwalkSettings, default_settings
from ..core.maps import MapStructure
from ..core.symmetry import Automorphism, vertex_orbits
from ..errors import ConsistencyError, IllConditionedSpectrumError, PreconditionError
from ..families.generators import is_quasi_tree_bouquet
from ..spectra.eigen import cluster_eigenvalues, symmetric_eigs
from ..spectra.rational import RationalMatrix
from ..walk.chebyshev import ProjectedSequence, projected_sequence
from ..walk.operator import WalkOperator, dual_operator
from .report import (
    GeneralPSTPair,
    IdentityPower,
    PeriodicVertex,
    PSTPair,
    TransferKind,
    VariantWitness,
)

RATIONAL_IDENTITY_POWERS = frozenset({1, 2, 3, 4, 6, 12})


def _scan_limit(seq: ProjectedSequence, t_max: int) -> int:
    return min(t_max, seq.horizon)


def _equals(matrix: RationalMatrix, u: int, v: int, value: int) -> bool:
    return int(matrix.numerators[u, v]) == value * matrix.denominator


# =============================================================================
# PST AND PERIODICITY
# =============================================================================


def detect_pst(seq: ProjectedSequence, t_max: int) -> List[PSTPair]:
    """
    All (u, v, tau) with u != v, d_u = d_v and B'_tau(u, v) = d_u, tau minimal.

    Both orientations of every pair are returned, sorted.
    """
    if t_max < 1:
        raise PreconditionError(f"t_max must be >= 1, got {t_max}")
    degrees = seq.degrees
    n = len(degrees)
    found: Dict[Tuple[int, int], int] = {}
    for t in range(1, _scan_limit(seq, t_max) + 1):
        b = seq[t]
        num = b.numerators
        for u in range(n):
            target = degrees[u] * b.denominator
            for v in range(u + 1, n):
                if degrees[v] != degrees[u] or (u, v) in found:
                    continue
                if int(num[u, v]) == target:
                    found[(u, v)] = t
                    logger.debug(f"PST {u} -> {v} at t={t}")
    pairs = []
    for (u, v), tau in found.items():
        pairs.extend((PSTPair(u, v, tau), PSTPair(v, u, tau)))
    return sorted(pairs)


def detect_periodicity(
    seq: ProjectedSequence, t_max: int
) -> Tuple[List[PeriodicVertex], Optional[int]]:
    """
    Per-vertex minimal tau with B'_tau(u, u) = d_u, and the map period.

    The map period is the first tau with B'_tau = D.
    """
    if t_max < 1:
        raise PreconditionError(f"t_max must be >= 1, got {t_max}")
    degrees = seq.degrees
    pending = set(range(len(degrees)))
    vertices: List[PeriodicVertex] = []
    map_period: Optional[int] = None
    for t in range(1, _scan_limit(seq, t_max) + 1):
        b = seq[t]
        for u in sorted(pending):
            if _equals(b, u, u, degrees[u]):
                vertices.append(PeriodicVertex(u, t))
                pending.discard(u)
        if map_period is None and b == seq.D:
            map_period = t
    return sorted(vertices), map_period


def period_bound(num_vertices: int, num_faces: int) -> int:
    """(8 min(|V|, |F|)^2)! / 2 as an exact integer."""
    if num_vertices < 1 or num_faces < 1:
        raise PreconditionError("period_bound needs |V|, |F| >= 1")
    return factorial(8 * min(num_vertices, num_faces) ** 2) // 2


# =============================================================================
# IDENTITY POWER
# =============================================================================


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def detect_identity_power(
    structure: MapStructure,
    op: WalkOperator,
    seq: ProjectedSequence,
    t_max: int,
    rational_spectrum: bool = False,
    settings: Optional[MapwalkSettings] = None,
) -> IdentityPower:
    """
    Minimal s with U^s = I, decided as periodicity of the map and its dual.

    The map's periods are the multiples of its minimal period tau, and the
    same holds for the dual, so s = lcm(tau, tau*). The result is checked
    against the parity rule: even tau gives s = tau; odd tau gives s = tau
    iff |V| = |F| and s = 2 tau when |V| < |F|; odd tau with |V| > |F| is
    impossible.

    Raises:
        ConsistencyError: the parity rule, the rational-spectrum cap or the
            quasi-tree-bouquet characterization of s = 1 is violated
    """
    settings = settings or default_settings()
    cap = min(t_max, settings.rational_identity_cap) if rational_spectrum else t_max
    tau = seq.period if seq.period is not None and seq.period <= t_max else None
    if tau is None:
        for t in range(1, _scan_limit(seq, t_max) + 1):
            if seq[t] == seq.D:
                tau = t
                break

    if tau is None or tau > cap:
        excluded = rational_spectrum and (tau is None or tau > cap) and seq.covers(cap)
        if excluded and tau is not None:
            raise ConsistencyError(
                f"map period {tau} exceeds {cap} although Chat Chat^T has a rational spectrum"
            )
        return IdentityPower(s=None, map_period=tau, dual_period=None, excluded=excluded)

    dual_seq = projected_sequence(dual_operator(op), 2 * tau, stop_at_period=True)
    dual_tau = dual_seq.period
    if dual_tau is None or (2 * tau) % dual_tau:
        raise ConsistencyError(f"dual map is not periodic within {2 * tau} steps")
    s = _lcm(tau, dual_tau)

    n_v, n_f = structure.num_vertices, structure.num_faces
    if tau % 2 == 0:
        expected = tau
    elif n_v == n_f:
        expected = tau
    elif n_v < n_f:
        expected = 2 * tau
    else:
        raise ConsistencyError(f"odd period {tau} with |V| = {n_v} > |F| = {n_f}")
    if s != expected:
        raise ConsistencyError(f"identity power {s} breaks the parity rule (expected {expected})")

    if rational_spectrum and s not in RATIONAL_IDENTITY_POWERS:
        raise ConsistencyError(f"identity power {s} outside {sorted(RATIONAL_IDENTITY_POWERS)}")
    if s == 1 and not is_quasi_tree_bouquet(structure):
        raise ConsistencyError("U = I on a map that is not a quasi-tree bouquet")

    confirmed = None
    if op.num_arcs <= settings.exact_power_max_arcs:
        confirmed = op.U.power(s).is_identity()
        if not confirmed:
            raise ConsistencyError(f"U^{s} != I although map and dual are periodic at {s}")
    logger.info(f"identity power s={s} (map period {tau}, dual period {dual_tau})")
    return IdentityPower(s=s, map_period=tau, dual_period=dual_tau, confirmed=confirmed)


def rational_identity_powers(rational_spectrum: bool) -> Optional[List[int]]:
    """The only possible minimal identity powers when Chat Chat^T is rational."""
    return sorted(RATIONAL_IDENTITY_POWERS) if rational_spectrum else None


# =============================================================================
# STRONG COSPECTRALITY
# =============================================================================


def strong_cospectrality(
    seq: ProjectedSequence,
    u: int,
    v: int,
    d: int,
    settings: Optional[MapwalkSettings] = None,
) -> bool:
    """
    Test E_r e_v = +-E_r e_u for every spectral idempotent E_r of B_d.

    Raises:
        IllConditionedSpectrumError: two eigenvalue clusters are closer than
            ``cluster_gap``
    """
    settings = settings or default_settings()
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    b = seq.normalized(d)
    pairs = symmetric_eigs(b, tol=settings.tol)
    clusters = cluster_eigenvalues(pairs.values, settings.cluster_radius, settings.cluster_gap)
    tolerance = 1e3 * settings.tol
    for cluster in clusters:
        basis = pairs.vectors[:, list(cluster.indices)]
        e_u = basis @ basis[u]
        e_v = basis @ basis[v]
        if min(np.linalg.norm(e_v - e_u), np.linalg.norm(e_v + e_u)) > tolerance:
            return False
    return True


def cospectrality_verdict(
    seq: ProjectedSequence, u: int, v: int, d: int, settings: Optional[MapwalkSettings] = None
) -> Optional[bool]:
    """Like :func:`strong_cospectrality`, with None for an ill-conditioned spectrum."""
    try:
        return strong_cospectrality(seq, u, v, d, settings)
    except IllConditionedSpectrumError as exc:
        logger.warning(f"cospectrality of ({u}, {v}) w.r.t. B_{d} indeterminate: {exc}")
        return None


# =============================================================================
# VARIANT AND GENERAL TRANSFERS
# =============================================================================


def _column_profile(
    block: RationalMatrix, u: int
) -> Tuple[List[int], Optional[Fraction]]:
    """Support of column u and its common value, or None if values differ."""
    column = block.numerators[:, u]
    support = [a for a in range(block.rows) if int(column[a]) != 0]
    values = {int(column[a]) for a in support}
    if len(values) != 1:
        return support, None
    return support, Fraction(values.pop(), block.denominator)


def _sweep(op: WalkOperator, t_max: int) -> Iterable[Tuple[int, RationalMatrix]]:
    block = op.incidence.N
    for t in range(1, t_max + 1):
        block = op.U @ block
        yield t, block


def variant_transfers(
    op: WalkOperator,
    structure: MapStructure,
    t_max: int,
    seq: Optional[ProjectedSequence] = None,
) -> List[VariantWitness]:
    """
    Reverse PST and vertex-face PST witnesses up to ``t_max``.

    Reverse PST: U^t N e_u = R N e_v, the arcs with head v.
    Vertex-face PST: U^t N e_u = c M e_f with c > 0 and c^2 deg f = d_u.
    Only the first t is kept for each (kind, u, target).
    """
    if t_max < 1:
        raise PreconditionError(f"t_max must be >= 1, got {t_max}")
    degrees = structure.vertex_degrees
    face_degrees = structure.face_degrees
    seen: Set[Tuple[TransferKind, int, int]] = set()
    witnesses: List[VariantWitness] = []

    for t, block in _sweep(op, t_max):
        for u in range(structure.num_vertices):
            support, value = _column_profile(block, u)
            if value is None or value <= 0:
                continue

            heads = {structure.head(a) for a in support}
            if value == 1 and len(heads) == 1:
                v = heads.pop()
                key = (TransferKind.REVERSE, u, v)
                if len(support) == degrees[v] and key not in seen:
                    seen.add(key)
                    witnesses.append(VariantWitness(TransferKind.REVERSE, u, v, t))

            faces = {structure.face_of[a] for a in support}
            if len(faces) == 1:
                f = faces.pop()
                key = (TransferKind.VERTEX_FACE, u, f)
                full_face = len(support) == face_degrees[f]
                if full_face and value * value * face_degrees[f] == degrees[u] and key not in seen:
                    seen.add(key)
                    periodic = None
                    if seq is not None and seq.covers(2 * t):
                        periodic = _equals(seq[2 * t], u, u, degrees[u])
                    witnesses.append(
                        VariantWitness(TransferKind.VERTEX_FACE, u, f, t, value, periodic)
                    )
    return sorted(witnesses, key=VariantWitness.sort_key)


def general_pst(
    op: WalkOperator, structure: MapStructure, t_max: int
) -> List[GeneralPSTPair]:
    """
    Transfer between vertices of different degree.

    U^t N e_u must equal c N e_v with c > 0; the norm forces c^2 d_v = d_u.
    """
    degrees = structure.vertex_degrees
    found: Dict[Tuple[int, int], GeneralPSTPair] = {}
    for t, block in _sweep(op, t_max):
        for u in range(structure.num_vertices):
            support, value = _column_profile(block, u)
            if value is None or value <= 0:
                continue
            tails = {structure.tail(a) for a in support}
            if len(tails) != 1:
                continue
            v = tails.pop()
            if v == u or degrees[v] == degrees[u] or (u, v) in found:
                continue
            if len(support) == degrees[v] and value * value * degrees[v] == degrees[u]:
                found[(u, v)] = GeneralPSTPair(u, v, t, value)
                logger.info(f"general PST {u} -> {v} at t={t}")
    return sorted(found.values())


# =============================================================================
# SYMMETRY
# =============================================================================


def propagate_pst_by_symmetry(
    structure: MapStructure,
    autos: Sequence[Automorphism],
    pair: PSTPair,
    detected: Optional[Sequence[PSTPair]] = None,
    op: Optional[WalkOperator] = None,
    max_arcs: int = 512,
) -> List[Tuple[int, int]]:
    """
    Push one PST pair through the automorphism group to pair every vertex.

    Returns:
        Sorted (x, y) pairs with x < y

    Raises:
        PreconditionError: the vertex action is not transitive
        ConsistencyError: a vertex gets two partners, the pairing disagrees
            with ``detected``, or U^(2 tau) != I
    """
    if len(vertex_orbits(structure, list(autos))) != 1:
        raise PreconditionError("PST propagation needs a vertex-transitive map")
    partner: Dict[int, int] = {}
    for auto in autos:
        x, y = auto.vertices[pair.u], auto.vertices[pair.v]
        for a, b in ((x, y), (y, x)):
            if partner.setdefault(a, b) != b:
                raise ConsistencyError(f"vertex {a} paired with {partner[a]} and {b}")
    if len(partner) != structure.num_vertices:
        raise ConsistencyError("propagated pairing misses vertices")

    pairing = sorted({(min(a, b), max(a, b)) for a, b in partner.items()})
    if detected is not None:
        detected_pairs = {(p.u, p.v) for p in detected if p.u < p.v and p.tau == pair.tau}
        if detected_pairs != set(pairing):
            raise ConsistencyError(
                f"propagated pairing {pairing} differs from detected {sorted(detected_pairs)}"
            )
    if op is not None and op.num_arcs <= max_arcs:
        if not op.U.power(2 * pair.tau).is_identity():
            raise ConsistencyError(f"U^{2 * pair.tau} != I on a vertex-transitive PST map")
    return pairing
