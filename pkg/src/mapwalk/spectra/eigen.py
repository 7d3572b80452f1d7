"""
Cyclic Jacobi eigensolver for small dense real symmetric matrices.

Rotations are applied in a fixed row-major (p, q) order every sweep, so the
result is bit-reproducible for a given input.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from loguru import logger

from ..errors import IllConditionedSpectrumError, PreconditionError


@dataclass(frozen=True)
class EigenPairs:
    """Eigenvalues ascending; eigenvectors are the matching orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EigenCluster:
    value: float
    indices: Tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.indices)


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def symmetric_eigs(matrix: np.ndarray, tol: float = 1e-9, max_sweeps: int = 64) -> EigenPairs:
    """
    Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Args:
        matrix: Square float matrix, symmetric within ``tol``
        tol: Residual bound; every pair satisfies ||Av - lv|| <= tol * ||A||
        max_sweeps: Sweep limit before giving up

    Returns:
        EigenPairs sorted by ascending eigenvalue

    Raises:
        PreconditionError: non-square or non-symmetric input
        IllConditionedSpectrumError: no convergence within ``max_sweeps``
    """
    original = np.array(matrix, dtype=np.float64)
    if original.ndim != 2 or original.shape[0] != original.shape[1]:
        raise PreconditionError(f"symmetric_eigs needs a square matrix, got {original.shape}")
    n = original.shape[0]
    scale = float(np.linalg.norm(original))
    asymmetry = float(np.max(np.abs(original - original.T))) if n else 0.0
    if asymmetry > tol * max(scale, 1.0):
        raise PreconditionError(f"matrix is not symmetric (max asymmetry {asymmetry:.3e})")

    a = (original + original.T) / 2.0
    v = np.eye(n)
    target = max(tol * 1e-3, 1e-14) * scale
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        off = float(np.sqrt(np.sum(np.triu(a, 1) ** 2)))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _rotate(a, v, p, q)
    else:
        off = float(np.sqrt(np.sum(np.triu(a, 1) ** 2)))
        if off > tol * max(scale, 1.0):
            raise IllConditionedSpectrumError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})"
            )

    values = np.diagonal(a).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = v[:, order]

    residual = np.linalg.norm(original @ vectors - vectors * values, axis=0) if n else np.zeros(0)
    if n and float(np.max(residual)) > tol * max(scale, 1.0):
        raise IllConditionedSpectrumError(
            f"eigenpair residual {float(np.max(residual)):.3e} exceeds tolerance"
        )
    logger.debug(f"symmetric_eigs: n={n} converged in {sweeps} sweep(s)")
    return EigenPairs(values=values, vectors=vectors, sweeps=sweeps)


def group_eigenvalues(values: np.ndarray, radius: float) -> List[EigenCluster]:
    """Chain sorted eigenvalues whose neighbours are within ``radius``."""
    clusters: List[EigenCluster] = []
    current: List[int] = []
    for i, value in enumerate(values):
        if current and value - values[current[-1]] > radius:
            clusters.append(EigenCluster(float(np.mean(values[current])), tuple(current)))
            current = []
        current.append(i)
    if current:
        clusters.append(EigenCluster(float(np.mean(values[current])), tuple(current)))
    return clusters


def cluster_eigenvalues(values: np.ndarray, radius: float, gap: float) -> List[EigenCluster]:
    """
    Like :func:`group_eigenvalues`, but refuse to decide when two clusters sit
    closer than ``gap``.

    Raises:
        IllConditionedSpectrumError: separation between clusters is below ``gap``
    """
    clusters = group_eigenvalues(values, radius)
    for left, right in zip(clusters, clusters[1:]):
        separation = float(values[right.indices[0]] - values[left.indices[-1]])
        if separation < gap:
            raise IllConditionedSpectrumError(
                f"eigenvalues {left.value:.12g} and {right.value:.12g} are separated by "
                f"{separation:.3e} < {gap:.1e}",
                gap=separation,
            )
    return clusters
