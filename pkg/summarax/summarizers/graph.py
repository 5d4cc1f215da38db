"""Sentence similarity graphs shared by TextRank and LexRank."""

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

import numpy as np

from ..algo.numerics import RankResult, damped_score_iteration
from ..config import RankSettings

T = TypeVar('T')


@dataclass(frozen=True)
class SentenceGraph:
    """Symmetric weighted graph; node i is sentence i, no self-loops."""
    weights: np.ndarray

    @property
    def n(self) -> int:
        return int(self.weights.shape[0])

    @classmethod
    def from_similarity(cls, items: Sequence[T], similarity: Callable[[T, T], float]) -> 'SentenceGraph':
        """Fill the upper triangle with ``similarity`` and mirror it."""
        n = len(items)
        weights = np.zeros((n, n), dtype=np.float64)
        for i in range(n):
            for j in range(i + 1, n):
                w = similarity(items[i], items[j])
                weights[i, j] = w
                weights[j, i] = w
        return cls(weights)

    def rank(self, settings: RankSettings) -> RankResult:
        weights = self.weights.copy()
        np.fill_diagonal(weights, 0.0)
        return damped_score_iteration(
            weights, damping=settings.damping, tol=settings.tol, max_iter=settings.max_iter
        )
