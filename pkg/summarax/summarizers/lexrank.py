"""LexRank: eigenvector centrality on the IDF-modified cosine graph."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from ..config import LEXRANK_MODES, RankSettings
from ..utils.text import IdfTable, TokenizedSentence, compute_idf
from .base import Algorithm, Ranking, Summarizer, select_top_k
from .graph import SentenceGraph


@dataclass(frozen=True)
class SentenceVector:
    """Bag of words weighted by occurrences x idf."""
    weights: dict[str, float]

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(w * w for w in self.weights.values()))


def sentence_vector(tokens: Sequence[str], idf: IdfTable) -> SentenceVector:
    counts = Counter(tokens)
    return SentenceVector({w: counts[w] * idf[w] for w in sorted(counts)})


def idf_modified_cosine(x: SentenceVector, y: SentenceVector) -> float:
    """IDF-modified cosine between two sentence vectors, in [0, 1].

    >>> x = SentenceVector({"alloy": 1.0, "strength": 2.0})
    >>> y = SentenceVector({"alloy": 1.0, "ductility": 2.0})
    >>> round(idf_modified_cosine(x, y), 12)
    0.2
    """
    if not x.weights or not y.weights:
        return 0.0
    shared = sorted(x.weights.keys() & y.weights.keys())
    numerator = math.fsum(x.weights[w] * y.weights[w] for w in shared)
    denominator = x.norm * y.norm
    if numerator <= 0 or denominator <= 0:
        return 0.0
    return min(1.0, numerator / denominator)


class LexRankSummarizer(Summarizer):
    """Rank sentences by centrality in the cosine similarity graph.

    ``continuous`` mode uses cosine values as edge weights; ``threshold``
    mode keeps an unweighted edge wherever the cosine exceeds the threshold.
    """

    algorithm = Algorithm.LEXRANK

    def __init__(
        self,
        stopwords: Optional[AbstractSet[str]] = None,
        rank: Optional[RankSettings] = None,
        mode: str = 'continuous',
        threshold: float = 0.1,
    ):
        super().__init__(stopwords)
        if mode not in LEXRANK_MODES:
            raise ValueError(f"LexRank mode must be one of {LEXRANK_MODES}, got {mode!r}")
        if not 0.0 <= threshold <= 1.0:
            raise ValueError(f"LexRank threshold must be in [0, 1], got {threshold}")
        self.rank_settings = rank or RankSettings()
        self.mode = mode
        self.threshold = threshold

    def build_graph(self, sentences: Sequence[TokenizedSentence]) -> SentenceGraph:
        content = [self.content_tokens(s) for s in sentences]
        # idf units are the document's own sentences
        idf = compute_idf(content)
        vectors = [sentence_vector(tokens, idf) for tokens in content]
        graph = SentenceGraph.from_similarity(vectors, idf_modified_cosine)
        if self.mode == 'threshold':
            graph = SentenceGraph((graph.weights > self.threshold).astype(float))
        return graph

    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        result = self.build_graph(sentences).rank(self.rank_settings)
        scores = [float(x) for x in result.scores]
        return Ranking(selected=select_top_k(scores, k), scores=dict(enumerate(scores)))
