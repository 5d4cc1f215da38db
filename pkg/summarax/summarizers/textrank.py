"""TextRank sentence ranking."""

import math
from typing import AbstractSet, Optional, Sequence

from ..config import RankSettings
from ..utils.text import TokenizedSentence
from .base import Algorithm, Ranking, Summarizer, select_top_k
from .graph import SentenceGraph


def overlap_similarity(a: Sequence[str], b: Sequence[str]) -> float:
    """Shared distinct words over ln|a| + ln|b|.

    Zero when either sentence has fewer than two words or nothing is shared.

    >>> round(overlap_similarity(["alloy", "strength"], ["alloy", "phase"]), 4)
    0.7213
    """
    if len(a) < 2 or len(b) < 2:
        return 0.0
    shared = len(set(a) & set(b))
    denominator = math.log(len(a)) + math.log(len(b))
    if shared == 0 or denominator <= 0:
        return 0.0
    return shared / denominator


class TextRankSummarizer(Summarizer):
    """Damped centrality on the word-overlap sentence graph."""

    algorithm = Algorithm.TEXTRANK

    def __init__(
        self,
        stopwords: Optional[AbstractSet[str]] = None,
        rank: Optional[RankSettings] = None,
    ):
        super().__init__(stopwords)
        self.rank_settings = rank or RankSettings()

    def build_graph(self, sentences: Sequence[TokenizedSentence]) -> SentenceGraph:
        content = [self.content_tokens(s) for s in sentences]
        return SentenceGraph.from_similarity(content, overlap_similarity)

    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        result = self.build_graph(sentences).rank(self.rank_settings)
        scores = [float(x) for x in result.scores]
        return Ranking(selected=select_top_k(scores, k), scores=dict(enumerate(scores)))
