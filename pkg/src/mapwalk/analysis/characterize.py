"""
Structural characterizations of the walk: U^2 = I, identity powers at odd
primes, the rational-spectrum cap and the odd-period column criterion.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..core.incidence import IncidenceMatrices
from ..core.maps import MapStructure, map_profile, vertex_face_counts
from ..errors import ConsistencyError, PreconditionError
from ..spectra.polynomial import rational_eigenvalues
from ..spectra.rational import RationalMatrix
from ..walk.operator import WalkOperator
from .report import PrimePowerCase, U2Verdict
from .transfer import RATIONAL_IDENTITY_POWERS


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# =============================================================================
# U^2 = I
# =============================================================================


def _balanced_counts(
    structure: MapStructure, num_arcs: int
) -> Tuple[bool, Optional[str]]:
    """Each facial walk passes v exactly d_v deg(f) / |A| times."""
    degrees = structure.vertex_degrees
    face_degrees = structure.face_degrees
    counts = vertex_face_counts(structure)
    for f, k in enumerate(face_degrees):
        for v, d in enumerate(degrees):
            expected = Fraction(d * k, num_arcs)
            if counts[v][f] != expected:
                return False, (
                    f"facial walk of face {f} passes vertex {v} {counts[v][f]} time(s), "
                    f"expected {expected}"
                )
    return True, None


def characterize_u2(
    structure: MapStructure, mats: IncidenceMatrices, op: WalkOperator
) -> U2Verdict:
    """
    Evaluate the five equivalent forms of U^2 = I exactly.

    The conditions are U^2 = I, PQ = J/|A|, |A| C = d d_F^T entrywise,
    C Delta^-1 C^T = D J D / |A| and the facial-walk passage counts. On type
    (k, d) maps the uniform test "every entry of C is k/|V|" is compared too.

    Raises:
        ConsistencyError: the conditions disagree
    """
    arcs = mats.num_arcs
    identity = RationalMatrix.identity(arcs)
    c = mats.C.to_int_array()
    dv = np.asarray(mats.vertex_degrees, dtype=np.int64)
    df = np.asarray(mats.face_degrees, dtype=np.int64)
    delta_inv = RationalMatrix.diagonal([Fraction(1, k) for k in mats.face_degrees])
    degree_outer = RationalMatrix.from_int_array(np.outer(dv, dv), arcs)

    walks_ok, witness = _balanced_counts(structure, arcs)
    conditions: Dict[str, bool] = {
        "u_squared": op.U @ op.U == identity,
        "pq_uniform": op.P @ op.Q == RationalMatrix.ones(arcs, arcs) / arcs,
        "incidence_product": bool(np.array_equal(c * arcs, np.outer(dv, df))),
        "c_delta_ct": mats.C @ delta_inv @ mats.C.T == degree_outer,
        "facial_walks": walks_ok,
    }
    verdicts = set(conditions.values())
    if len(verdicts) != 1:
        raise ConsistencyError(f"U^2 = I conditions disagree: {conditions}")
    holds = verdicts.pop()

    fast = None
    profile = map_profile(structure)
    if profile.map_type is not None:
        k = profile.face_degree
        fast = all(
            Fraction(int(x)) == Fraction(k, structure.num_vertices) for x in c.flatten()
        )
        if fast != holds:
            raise ConsistencyError(f"uniform U^2 test says {fast}, exact conditions say {holds}")

    logger.debug(f"U^2 = I: {holds}")
    return U2Verdict(
        holds=holds,
        conditions=conditions,
        failed_witness=None if holds else witness,
        uniform_fast_path=fast,
    )


# =============================================================================
# ODD PRIME IDENTITY POWERS
# =============================================================================


def classify_prime_power(
    structure: MapStructure, mats: IncidenceMatrices, op: WalkOperator, p: int
) -> PrimePowerCase:
    """
    Which case explains U^p = I for an odd prime p on a uniform map.

    Cases, with d the vertex degree and alpha the incidence multiplicity:
        i:   d = alpha and U = I
        ii:  d = 2 alpha, |V| = |F| = p, alpha even
        iii: d = 3 alpha, p = 3, |V| = |F| = 9, 4 divides alpha

    Returns NOT_APPLICABLE when U^p != I.

    Raises:
        PreconditionError: p is not an odd prime, or the map is not of type
            (k, d) with uniform multiplicity
        ConsistencyError: U^p = I but not exactly one case matches
    """
    if p == 2 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    profile = map_profile(structure)
    if profile.map_type is None or profile.multiplicity is None:
        raise PreconditionError("classification needs a type (k, d) map with uniform multiplicity")
    if not op.U.power(p).is_identity():
        return PrimePowerCase.NOT_APPLICABLE

    d = profile.vertex_degree
    alpha = profile.multiplicity
    n_v, n_f = mats.num_vertices, mats.num_faces
    matches = {
        PrimePowerCase.CASE_I: d == alpha and op.U.is_identity(),
        PrimePowerCase.CASE_II: d == 2 * alpha and n_v == n_f == p and alpha % 2 == 0,
        PrimePowerCase.CASE_III: (
            d == 3 * alpha and p == 3 and n_v == n_f == 9 and alpha % 4 == 0
        ),
    }
    hits = [case for case, ok in matches.items() if ok]
    if len(hits) != 1:
        raise ConsistencyError(f"U^{p} = I but cases {[h.value for h in hits]} match")
    logger.info(f"U^{p} = I explained by case {hits[0].value}")
    return hits[0]


# =============================================================================
# RATIONAL SPECTRUM AND ODD PERIODS
# =============================================================================


def rationality_period_constraint(
    mats: IncidenceMatrices, approximations: Optional[List[float]] = None
) -> Optional[List[int]]:
    """
    Allowed minimal identity powers when Chat Chat^T has a rational spectrum.

    Returns [1, 2, 3, 4, 6, 12], or None when some eigenvalue is irrational.
    """
    all_rational, _ = rational_eigenvalues(mats.c_hat(), approximations or ())
    if not all_rational:
        return None
    return sorted(RATIONAL_IDENTITY_POWERS)


def odd_period_column_check(op: WalkOperator, tau: int) -> bool:
    """
    For odd tau: whether col(U^((tau+1)/2) N) lies inside col(M).

    This holds exactly when the map is periodic at tau.
    """
    if tau < 1 or tau % 2 == 0:
        raise PreconditionError(f"tau must be a positive odd integer, got {tau}")
    mats = op.incidence
    block = op.U.power((tau + 1) // 2) @ mats.N
    return mats.M.column_space_contains(block)
