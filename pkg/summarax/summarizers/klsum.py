"""KL-Sum: greedy selection minimizing KL(document || summary)."""

import math
from collections import Counter
from typing import AbstractSet, Optional, Sequence

from ..algo.numerics import kl_divergence, normalize_counts
from ..utils.text import TokenizedSentence
from .base import TIE_DECIMALS, Algorithm, Ranking, Summarizer
from .lsa import EMPTY_VOCABULARY

DEFAULT_EPSILON = 1e-12


class KLSummarizer(Summarizer):
    """Add, one at a time, the sentence that brings the summary's unigram
    distribution closest to the document's.

    A sentence's score is the divergence it reached the last time it was a
    candidate (for selected sentences, the divergence when picked).
    """

    algorithm = Algorithm.KLSUM

    def __init__(self, stopwords: Optional[AbstractSet[str]] = None, epsilon: float = DEFAULT_EPSILON):
        super().__init__(stopwords)
        if epsilon <= 0:
            raise ValueError(f"epsilon must be > 0, got {epsilon}")
        self.epsilon = epsilon

    def divergence(self, target: dict[str, float], counts: Counter) -> float:
        """KL(target || normalized counts); infinite when counts are empty."""
        if sum(counts.values()) == 0:
            return math.inf
        return kl_divergence(target, normalize_counts(counts), self.epsilon)

    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        content = [Counter(self.content_tokens(s)) for s in sentences]
        document: Counter = Counter()
        for counts in content:
            document.update(counts)
        if not document:
            return Ranking(
                selected=list(range(k)),
                scores={i: 0.0 for i in range(len(sentences))},
                warnings=(EMPTY_VOCABULARY,),
            )

        target = normalize_counts(document)
        summary: Counter = Counter()
        selected: list[int] = []
        scores: dict[int, float] = {}

        while len(selected) < k:
            best, best_key = -1, None
            for j in range(len(sentences)):
                if j in selected:
                    continue
                value = self.divergence(target, summary + content[j])
                scores[j] = value
                key = (round(value, TIE_DECIMALS) if math.isfinite(value) else math.inf, j)
                if best_key is None or key < best_key:
                    best, best_key = j, key
            selected.append(best)
            summary += content[best]

        return Ranking(selected=selected, scores=scores)
