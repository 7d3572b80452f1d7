"""
Projected walk sequence B'_t = N^T U^t N via the Chebyshev recurrence.

The normalized matrices B_t = D^-1/2 B'_t D^-1/2 satisfy B_t = T_t(B_1), so
B_{t+1} = 2 B_t B_1 - B_{t-1}. In unnormalized form

    B'_{t+1} = 2 B'_t D^-1 B'_1 - B'_{t-1},   B'_0 = D,

which involves only rationals. Once B'_tau = D the sequence repeats with
period tau, so sweeps may stop there.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from ..errors import PreconditionError
from ..spectra.rational import RationalMatrix
from .operator import WalkOperator


@dataclass(frozen=True)
class ProjectedSequence:
    """
    B'_0 .. B'_T for one operator.

    ``period`` is set when the sweep reached B'_tau = D; entries past the
    stored terms are then read modulo the period.
    """

    terms: Tuple[RationalMatrix, ...]
    degrees: Tuple[int, ...]
    period: Optional[int] = None

    @property
    def horizon(self) -> int:
        return len(self.terms) - 1

    @property
    def D(self) -> RationalMatrix:  # noqa: N802
        return self.terms[0]

    def __len__(self) -> int:
        return len(self.terms)

    def covers(self, t: int) -> bool:
        return t <= self.horizon or self.period is not None

    def __getitem__(self, t: int) -> RationalMatrix:
        if t < 0:
            raise PreconditionError(f"negative step {t}")
        if t <= self.horizon:
            return self.terms[t]
        if self.period is None:
            raise PreconditionError(f"step {t} beyond sweep horizon {self.horizon}")
        return self.terms[t % self.period]

    def entry(self, t: int, u: int, v: int) -> Fraction:
        return self[t][u, v]

    def normalized(self, t: int) -> np.ndarray:
        """Float B_t = D^-1/2 B'_t D^-1/2."""
        root = np.sqrt(np.asarray(self.degrees, dtype=np.float64))
        return self[t].to_float() / root[:, None] / root[None, :]


def projected_sequence(
    op: WalkOperator, t_max: int, stop_at_period: bool = False
) -> ProjectedSequence:
    """
    Run the Chebyshev recurrence up to ``t_max``.

    Args:
        op: Walk operator
        t_max: Last step to compute (>= 1)
        stop_at_period: Stop at the first tau >= 1 with B'_tau = D

    Returns:
        ProjectedSequence
    """
    if t_max < 1:
        raise PreconditionError(f"t_max must be >= 1, got {t_max}")
    n = op.incidence.N
    d = op.incidence.D
    d_inv = RationalMatrix.diagonal([Fraction(1, k) for k in op.degrees])
    b1 = n.T @ op.U @ n
    step = d_inv @ b1
    terms: List[RationalMatrix] = [d, b1]
    period = 1 if b1 == d else None

    while len(terms) <= t_max and not (stop_at_period and period is not None):
        nxt = (terms[-1] @ step) * 2 - terms[-2]
        terms.append(nxt)
        t = len(terms) - 1
        if period is None and nxt == d:
            period = t
            logger.debug(f"projected sequence periodic at t={t}")

    if stop_at_period and period is not None:
        terms = terms[: period + 1]
    return ProjectedSequence(terms=tuple(terms), degrees=tuple(op.degrees), period=period)


def first_period(seq: ProjectedSequence) -> Optional[int]:
    """Minimal tau >= 1 with B'_tau = D within the stored terms."""
    for t in range(1, seq.horizon + 1):
        if seq.terms[t] == seq.D:
            return t
    return None


def chebyshev_oracle_check(op: WalkOperator, t: int) -> bool:
    """Compare the recurrence's B'_t with N^T U^t N by direct exact power."""
    if t < 0:
        raise PreconditionError(f"t must be non-negative, got {t}")
    n = op.incidence.N
    direct = n.T @ op.U.power(t) @ n
    recurred = projected_sequence(op, max(t, 1))[t]
    agrees = direct == recurred
    if not agrees:
        logger.warning(f"Chebyshev recurrence disagrees with U^{t} at t={t}")
    return agrees


def oracle_agreement(op: WalkOperator, t_max: int) -> List[int]:
    """Steps t <= t_max where recurrence and direct power disagree (empty on success)."""
    n = op.incidence.N
    seq = projected_sequence(op, max(t_max, 1))
    bad = []
    column_block = n
    for t in range(t_max + 1):
        if n.T @ column_block != seq[t]:
            bad.append(t)
        column_block = op.U @ column_block
    return bad


def coupled_recurrence_check(op: WalkOperator, t_max: int) -> bool:
    """
    Check the coupled recurrence with D'_t = N^T U^t P N:

        B'_{t+1} = 2 D'_t - B'_t
        D'_{t+1} = 2 B'_{t+1} D^-1 D'_0 - D'_t
    """
    n = op.incidence.N
    d_inv = RationalMatrix.diagonal([Fraction(1, k) for k in op.degrees])
    x = n
    y = op.P @ n
    b_terms = []
    d_terms = []
    for _ in range(t_max + 2):
        b_terms.append(n.T @ x)
        d_terms.append(n.T @ y)
        x = op.U @ x
        y = op.U @ y

    d0_step = d_inv @ d_terms[0]
    for t in range(t_max + 1):
        if b_terms[t + 1] != d_terms[t] * 2 - b_terms[t]:
            logger.warning(f"B recurrence fails at t={t}")
            return False
        if d_terms[t + 1] != (b_terms[t + 1] @ d0_step) * 2 - d_terms[t]:
            logger.warning(f"D recurrence fails at t={t}")
            return False
    return True


def chebyshev_values(x: Fraction, t_max: int) -> List[Fraction]:
    """T_0(x) .. T_t_max(x) by the three-term recurrence."""
    values = [Fraction(1), Fraction(x)]
    while len(values) <= t_max:
        values.append(2 * x * values[-1] - values[-2])
    return values[: t_max + 1]
