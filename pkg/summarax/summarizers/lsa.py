"""Latent semantic analysis: one sentence per SVD topic."""

import logging
from collections import Counter
from typing import Sequence

import numpy as np

from ..algo.numerics import svd_decompose
from ..utils.text import TokenizedSentence
from .base import TIE_DECIMALS, Algorithm, Ranking, Summarizer

logger = logging.getLogger(__name__)

EMPTY_VOCABULARY = "empty vocabulary after stopword removal; kept the first k sentences"


def term_sentence_matrix(content: Sequence[Sequence[str]]) -> tuple[list[str], np.ndarray]:
    """Raw term frequencies: rows are sorted distinct terms, columns sentences."""
    vocabulary = sorted({t for tokens in content for t in tokens})
    row_of = {term: i for i, term in enumerate(vocabulary)}
    matrix = np.zeros((len(vocabulary), len(content)), dtype=np.float64)
    for j, tokens in enumerate(content):
        for term, count in Counter(tokens).items():
            matrix[row_of[term], j] = count
    return vocabulary, matrix


def _best_unselected(loadings: np.ndarray, taken: set[int]) -> int:
    candidates = [j for j in range(len(loadings)) if j not in taken]
    return min(candidates, key=lambda j: (-round(float(loadings[j]), TIE_DECIMALS), j))


class LsaSummarizer(Summarizer):
    """For topic i, pick the unselected sentence with the largest |Vt[i, j]|.

    When the rank runs out before k sentences are chosen, the remaining slots
    go by the first topic's loadings. A sentence's score is its largest
    loading over the topics considered.
    """

    algorithm = Algorithm.LSA

    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        content = [self.content_tokens(s) for s in sentences]
        vocabulary, matrix = term_sentence_matrix(content)
        if not vocabulary:
            return Ranking(
                selected=list(range(k)),
                scores={i: 0.0 for i in range(len(sentences))},
                warnings=(EMPTY_VOCABULARY,),
            )

        svd = svd_decompose(matrix)
        loadings = np.abs(svd.vt)
        topics = min(k, svd.rank)
        logger.debug(f"LSA: {len(vocabulary)} terms x {len(sentences)} sentences, rank {svd.rank}")

        taken: set[int] = set()
        for i in range(topics):
            taken.add(_best_unselected(loadings[i], taken))
        while len(taken) < k:
            taken.add(_best_unselected(loadings[0], taken))

        considered = loadings[:max(topics, 1)]
        scores = {j: float(considered[:, j].max()) for j in range(len(sentences))}
        return Ranking(selected=sorted(taken), scores=scores)
