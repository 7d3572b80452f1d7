#!/usr/bin/env python3
"""
The vertex-face walk operator U = (2P - I)(2Q - I).

P projects onto the column space of M (arcs grouped by face) and Q onto the
column space of N (arcs grouped by tail vertex). Both are built
combinatorially with a common denominator, so U is exact.

States started at a vertex are kept unnormalized: ``N e_u`` has squared norm
d_u and every probability is formed as a ratio of exact rationals.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from typing import List, Sequence, Union

import numpy as np
from loguru import logger

from ..core.incidence import IncidenceMatrices
from ..errors import ConsistencyError, PreconditionError
from ..spectra.rational import RationalMatrix


def _lcm(values: Sequence[int]) -> int:
    return reduce(lambda a, b: a // gcd(a, b) * b, values, 1)


def _block_projector(labels: Sequence[int], degrees: Sequence[int]) -> RationalMatrix:
    """Entry (a, b) is 1/deg when a and b share a label, else 0."""
    den = _lcm(degrees)
    labels_arr = np.asarray(labels, dtype=np.int64)
    same = labels_arr[:, None] == labels_arr[None, :]
    weights = np.asarray([den // k for k in degrees], dtype=np.int64)[labels_arr]
    return RationalMatrix(np.where(same, weights[:, None], 0), den)


# =============================================================================
# OPERATOR
# =============================================================================


@dataclass(frozen=True)
class WalkOperator:
    """
    Exact transition matrix and its two projections.

    Attributes:
        U: Transition matrix on arcs
        P: Face projection M Delta^-1 M^T
        Q: Vertex projection N D^-1 N^T
        incidence: The incidence matrices the operator was built from
    """

    U: RationalMatrix
    P: RationalMatrix
    Q: RationalMatrix
    incidence: IncidenceMatrices = field(repr=False)

    @property
    def num_arcs(self) -> int:
        return self.U.rows

    @property
    def num_vertices(self) -> int:
        return self.incidence.num_vertices

    @property
    def degrees(self) -> List[int]:
        return list(self.incidence.vertex_degrees)

    @cached_property
    def U_float(self) -> np.ndarray:  # noqa: N802
        return self.U.to_float()

    def verify(self) -> None:
        """
        Check P, Q idempotent and symmetric, U orthogonal, U fixes the all-ones vector.

        Raises:
            ConsistencyError: any identity fails
        """
        identity = RationalMatrix.identity(self.num_arcs)
        ones = RationalMatrix.ones(self.num_arcs, 1)
        checks = {
            "P^2 = P": self.P @ self.P == self.P,
            "Q^2 = Q": self.Q @ self.Q == self.Q,
            "P^T = P": self.P.is_symmetric(),
            "Q^T = Q": self.Q.is_symmetric(),
            "U = (2P - I)(2Q - I)": self.U == (self.P * 2 - identity) @ (self.Q * 2 - identity),
            "U^T U = I": (self.U.T @ self.U).is_identity(),
            "U 1 = 1": self.U @ ones == ones,
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise ConsistencyError(f"walk operator identities failed: {', '.join(failed)}")
        logger.debug(f"walk operator verified on {self.num_arcs} arcs")


def build_operator(mats: IncidenceMatrices, verify: bool = True) -> WalkOperator:
    """
    Build the exact vertex-face walk operator.

    Args:
        mats: Incidence matrices of a map
        verify: Check the operator identities exactly

    Returns:
        WalkOperator
    """
    vertex_of = mats.N.to_int_array().argmax(axis=1)
    face_of = mats.M.to_int_array().argmax(axis=1)
    p = _block_projector(face_of, mats.face_degrees)
    q = _block_projector(vertex_of, mats.vertex_degrees)
    identity = RationalMatrix.identity(mats.num_arcs)
    u = (p * 2 - identity) @ (q * 2 - identity)
    op = WalkOperator(U=u, P=p, Q=q, incidence=mats)
    if verify:
        op.verify()
    logger.debug(f"Built walk operator: {mats.num_arcs} arcs, denominator {u.denominator}")
    return op


def dual_operator(op: WalkOperator, verify: bool = False) -> WalkOperator:
    """
    Operator of the dual map; equals U^T of the primal.

    Raises:
        ConsistencyError: when ``verify`` and the dual operator is not U^T
    """
    dual_op = WalkOperator(
        U=(op.Q * 2 - RationalMatrix.identity(op.num_arcs))
        @ (op.P * 2 - RationalMatrix.identity(op.num_arcs)),
        P=op.Q,
        Q=op.P,
        incidence=op.incidence.dual(),
    )
    if verify and dual_op.U != op.U.T:
        raise ConsistencyError("dual operator differs from U^T")
    return dual_op


# =============================================================================
# STATES
# =============================================================================


@dataclass(frozen=True)
class WalkState:
    """
    A state on arcs.

    Exact states hold a RationalMatrix column whose squared norm is ``scale``;
    the physical (unit) state is amplitudes / sqrt(scale). Float states hold a
    numpy vector with scale 1.
    """

    amplitudes: Union[RationalMatrix, np.ndarray]
    scale: Fraction = Fraction(1)

    @property
    def exact(self) -> bool:
        return isinstance(self.amplitudes, RationalMatrix)

    def squared_norm(self) -> Union[Fraction, float]:
        if self.exact:
            column = self.amplitudes
            return (column.T @ column)[0, 0]
        return float(np.dot(self.amplitudes, self.amplitudes))

    def normalized(self) -> np.ndarray:
        """Float unit-norm amplitudes."""
        raw = self.amplitudes.to_float()[:, 0] if self.exact else np.asarray(self.amplitudes)
        return raw / np.sqrt(float(self.scale))

    def to_float(self) -> "WalkState":
        return WalkState(amplitudes=self.normalized())


def vertex_state(op: WalkOperator, u: int) -> WalkState:
    """The canonical exact start N e_u, with scale d_u."""
    _check_vertex(op, u)
    return WalkState(amplitudes=op.incidence.N.column(u), scale=Fraction(op.degrees[u]))


def float_state(amplitudes: Sequence[float]) -> WalkState:
    vector = np.asarray(amplitudes, dtype=np.float64)
    norm = float(np.linalg.norm(vector))
    if abs(norm - 1.0) > 1e-12:
        raise PreconditionError(f"state norm is {norm:.15g}, expected 1")
    return WalkState(amplitudes=vector)


def _check_vertex(op: WalkOperator, v: int) -> None:
    if not 0 <= v < op.num_vertices:
        raise PreconditionError(f"vertex {v} out of range 0..{op.num_vertices - 1}")


def evolve(op: WalkOperator, state: WalkState, t: int) -> WalkState:
    """
    Apply U^t by repeated multiplication.

    Raises:
        PreconditionError: t is negative
        ConsistencyError: the exact norm changed
    """
    if t < 0:
        raise PreconditionError(f"t must be non-negative, got {t}")
    if state.exact:
        column = state.amplitudes
        for _ in range(t):
            column = op.U @ column
        result = WalkState(amplitudes=column, scale=state.scale)
        if result.squared_norm() != state.squared_norm():
            raise ConsistencyError("exact evolution changed the norm")
        return result

    vector = np.asarray(state.amplitudes, dtype=np.float64)
    for _ in range(t):
        vector = op.U_float @ vector
    return WalkState(amplitudes=vector, scale=state.scale)


def evolve_sequence(op: WalkOperator, state: WalkState, t_max: int) -> List[WalkState]:
    """States at t = 0..t_max."""
    if t_max < 0:
        raise PreconditionError(f"t_max must be non-negative, got {t_max}")
    states = [state]
    for _ in range(t_max):
        states.append(evolve(op, states[-1], 1))
    return states


def vector_sequence(op: WalkOperator, u: int, t_max: int) -> List[RationalMatrix]:
    """Exact columns U^t N e_u for t = 0..t_max."""
    return [s.amplitudes for s in evolve_sequence(op, vertex_state(op, u), t_max)]


def transfer_probability(
    op: WalkOperator, u: int, v: int, t_max: int, exact: bool = False
) -> Union[List[float], List[Fraction]]:
    """
    |<N^ e_v, U^t N^ e_u>|^2 for t = 0..t_max.

    The overlap is B'_t(u, v) = (N e_v)^T U^t N e_u, so the probability is
    B'_t(u, v)^2 / (d_u d_v), exact until the final conversion.
    """
    _check_vertex(op, v)
    row = op.incidence.N.column(v).T
    du, dv = op.degrees[u], op.degrees[v]
    probabilities = []
    for column in vector_sequence(op, u, t_max):
        overlap = (row @ column)[0, 0]
        probabilities.append(overlap * overlap / (du * dv))
    if exact:
        return probabilities
    return [float(p) for p in probabilities]
