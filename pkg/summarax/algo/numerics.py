"""Small dense numerics: damped score iteration, Jacobi SVD, KL divergence.

The Jacobi sweep kernel is JIT-compiled with numba when it is installed.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

import numpy as np

from ..errors import (
    DimensionZeroError, InvalidDistributionError, NegativeWeightError,
    NonFiniteWeightError, NumericsError,
)

# Try to import numba for JIT compilation
try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    # Dummy decorator if numba not available
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        def decorator(func):
            return func
        return decorator

logger = logging.getLogger(__name__)

DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 200

MAX_SVD_DIM = 2048
MAX_SWEEPS = 60
JACOBI_EPS = 1e-13
# Singular values below this fraction of the largest are treated as zero
RANK_CUTOFF = 1e-13

DISTRIBUTION_TOL = 1e-6


class ConvergenceStatus(Enum):
    CONVERGED = 'converged'
    MAX_ITER_REACHED = 'max_iter_reached'


@dataclass(frozen=True)
class RankResult:
    """Scores from :func:`damped_score_iteration` with their stop reason."""
    scores: np.ndarray
    status: ConvergenceStatus
    iterations: int

    @property
    def converged(self) -> bool:
        return self.status is ConvergenceStatus.CONVERGED


def _check_finite(matrix: np.ndarray) -> None:
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteWeightError("Matrix contains NaN or infinite entries")


def damped_score_iteration(
    adjacency: np.ndarray,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RankResult:
    """Weighted PageRank-style fixed point.

    ``adjacency[j, i]`` is the weight of edge j -> i. Iterates

        X(i) = (1 - d) + d * sum_j (w_ji / sum_k w_jk) * X(j)

    from all-ones until the max-abs change is at most ``tol`` or ``max_iter``
    updates have run. Nodes with zero out-weight distribute nothing.

    >>> damped_score_iteration(np.zeros((1, 1))).scores.round(6).tolist()
    [0.15]
    """
    weights = np.asarray(adjacency, dtype=np.float64)
    if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
        raise NumericsError(f"Adjacency must be square, got shape {weights.shape}")
    n = weights.shape[0]
    if n == 0:
        raise DimensionZeroError("Adjacency has no nodes")
    _check_finite(weights)
    if np.any(weights < 0):
        raise NegativeWeightError("Edge weights must be non-negative")
    if not 0.0 < damping < 1.0:
        raise NumericsError(f"Damping must be in (0, 1), got {damping}")

    out_weight = weights.sum(axis=1)
    transition = np.zeros_like(weights)
    has_out = out_weight > 0
    transition[has_out] = weights[has_out] / out_weight[has_out, None]
    incoming = transition.T

    scores = np.ones(n, dtype=np.float64)
    for iteration in range(1, max_iter + 1):
        updated = (1.0 - damping) + damping * (incoming @ scores)
        change = float(np.max(np.abs(updated - scores)))
        scores = updated
        if change <= tol:
            return RankResult(scores, ConvergenceStatus.CONVERGED, iteration)

    logger.warning(f"Score iteration stopped after {max_iter} iterations (tol={tol})")
    return RankResult(scores, ConvergenceStatus.MAX_ITER_REACHED, max_iter)


@njit(cache=True)
def _jacobi_sweeps(work: np.ndarray, v: np.ndarray, max_sweeps: int, eps: float) -> int:
    """One-sided Jacobi: rotate column pairs of ``work`` until orthogonal.

    Rotations are accumulated into ``v``. Both arrays are updated in place.

    Returns:
        Number of sweeps performed
    """
    rows, cols = work.shape
    for sweep in range(max_sweeps):
        rotated = False
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for r in range(rows):
                    alpha += work[r, p] * work[r, p]
                    beta += work[r, q] * work[r, q]
                    gamma += work[r, p] * work[r, q]

                if gamma == 0.0 or abs(gamma) <= eps * math.sqrt(alpha * beta):
                    continue
                rotated = True

                zeta = (beta - alpha) / (2.0 * gamma)
                sign = 1.0 if zeta >= 0.0 else -1.0
                t = sign / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t

                for r in range(rows):
                    wp = work[r, p]
                    wq = work[r, q]
                    work[r, p] = c * wp - s * wq
                    work[r, q] = s * wp + c * wq
                for r in range(cols):
                    vp = v[r, p]
                    vq = v[r, q]
                    v[r, p] = c * vp - s * vq
                    v[r, q] = s * vp + c * vq
        if not rotated:
            return sweep + 1
    return max_sweeps


def _complete_orthonormal(u: np.ndarray, filled: np.ndarray) -> np.ndarray:
    """Replace unfilled columns of ``u`` with unit vectors orthogonal to the rest."""
    rows = u.shape[0]
    basis = [u[:, j] for j in range(u.shape[1]) if filled[j]]
    for j in range(u.shape[1]):
        if filled[j]:
            continue
        best, best_norm = None, -1.0
        for e in range(rows):
            cand = np.zeros(rows)
            cand[e] = 1.0
            # Twice is enough for Gram-Schmidt
            for _ in range(2):
                for b in basis:
                    cand -= (b @ cand) * b
            norm = float(np.linalg.norm(cand))
            if norm > best_norm + 1e-12:
                best, best_norm = cand, norm
        column = best / best_norm
        u[:, j] = column
        basis.append(column)
    return u


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``A = U @ diag(singular_values) @ Vt``."""
    u: np.ndarray
    singular_values: np.ndarray
    vt: np.ndarray
    sweeps: int = 0

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.singular_values > 0))

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.singular_values) @ self.vt


def svd_decompose(matrix: np.ndarray) -> SvdResult:
    """Singular value decomposition by one-sided Jacobi rotations.

    Meant for term-sentence matrices of single documents; both dimensions
    must be at most ``MAX_SVD_DIM``.

    >>> svd_decompose(np.diag([3.0, 2.0])).singular_values.tolist()
    [3.0, 2.0]
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionZeroError(f"Cannot decompose matrix of shape {a.shape}")
    if max(a.shape) > MAX_SVD_DIM:
        raise NumericsError(f"Matrix {a.shape} exceeds the small-matrix bound {MAX_SVD_DIM}")
    _check_finite(a)

    # Work on the tall orientation so the column count is k = min(m, n)
    transposed = a.shape[0] < a.shape[1]
    work = np.ascontiguousarray(a.T if transposed else a)
    cols = work.shape[1]
    v = np.eye(cols)

    sweeps = _jacobi_sweeps(work, v, MAX_SWEEPS, JACOBI_EPS)
    if sweeps >= MAX_SWEEPS:
        logger.warning(f"Jacobi SVD hit the sweep cap ({MAX_SWEEPS}) on shape {a.shape}")

    sigma = np.linalg.norm(work, axis=0)
    order = np.argsort(-sigma, kind='stable')
    sigma = sigma[order]
    work = work[:, order]
    v = v[:, order]

    cutoff = sigma[0] * RANK_CUTOFF if sigma[0] > 0 else 0.0
    filled = sigma > cutoff
    sigma = np.where(filled, sigma, 0.0)
    u = np.zeros_like(work)
    u[:, filled] = work[:, filled] / sigma[filled]
    if not filled.all():
        u = _complete_orthonormal(u, filled)

    if transposed:
        return SvdResult(u=v, singular_values=sigma, vt=u.T.copy(), sweeps=sweeps)
    return SvdResult(u=u, singular_values=sigma, vt=v.T.copy(), sweeps=sweeps)


def _check_distribution(dist: Mapping[str, float], name: str) -> None:
    values = list(dist.values())
    if any((not math.isfinite(p)) or p < 0 for p in values):
        raise InvalidDistributionError(f"{name} has negative or non-finite probabilities")
    total = math.fsum(values)
    if abs(total - 1.0) > DISTRIBUTION_TOL:
        raise InvalidDistributionError(f"{name} sums to {total}, expected 1")


def normalize_counts(counts: Mapping[str, int]) -> dict[str, float]:
    """Turn token counts into a probability distribution (keys sorted)."""
    total = sum(counts.values())
    if total <= 0:
        raise InvalidDistributionError("Cannot normalize empty counts")
    return {w: counts[w] / total for w in sorted(counts) if counts[w] > 0}


def kl_divergence(p: Mapping[str, float], q: Mapping[str, float], epsilon: float = 1e-12) -> float:
    """KL(P || Q) in nats with Q floored at ``epsilon``.

    >>> round(kl_divergence({"a": 1.0}, {"a": 0.5, "b": 0.5}), 4)
    0.6931
    """
    if epsilon <= 0:
        raise NumericsError(f"epsilon must be > 0, got {epsilon}")
    _check_distribution(p, 'P')
    _check_distribution(q, 'Q')
    terms = [
        pw * math.log(pw / max(q.get(w, 0.0), epsilon))
        for w, pw in sorted(p.items())
        if pw > 0
    ]
    return math.fsum(terms)
