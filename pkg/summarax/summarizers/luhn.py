"""Luhn's significant-word cluster scoring."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from ..utils.text import TokenizedSentence
from .base import Algorithm, Ranking, Summarizer, select_top_k

DEFAULT_SIGNIFICANCE_RATIO = 0.1
DEFAULT_GAP_LIMIT = 4


@dataclass(frozen=True)
class LuhnWindow:
    """A cluster of significant tokens; ``start`` and ``end`` are inclusive."""
    start: int
    end: int
    significant_count: int

    @property
    def span(self) -> int:
        return self.end - self.start + 1

    @property
    def score(self) -> float:
        return self.significant_count ** 2 / self.span


def find_windows(
    tokens: Sequence[str], significant: AbstractSet[str], gap_limit: int = DEFAULT_GAP_LIMIT
) -> list[LuhnWindow]:
    """Maximal windows bounded by significant tokens.

    Consecutive significant tokens inside a window are separated by at most
    ``gap_limit`` non-significant tokens.
    """
    if gap_limit < 0:
        raise ValueError(f"gap_limit must be >= 0, got {gap_limit}")
    positions = [i for i, t in enumerate(tokens) if t in significant]
    if not positions:
        return []

    windows = []
    start = prev = positions[0]
    count = 1
    for pos in positions[1:]:
        if pos - prev - 1 > gap_limit:
            windows.append(LuhnWindow(start, prev, count))
            start, count = pos, 0
        count += 1
        prev = pos
    windows.append(LuhnWindow(start, prev, count))
    return windows


def luhn_sentence_score(
    sentence: TokenizedSentence | Sequence[str],
    significant: AbstractSet[str],
    gap_limit: int = DEFAULT_GAP_LIMIT,
) -> float:
    """Best window score: significant_count squared over span.

    >>> luhn_sentence_score(["s", "x", "x", "s"], {"s"})
    1.0
    >>> luhn_sentence_score(["s", "s", "s"], {"s"})
    3.0
    """
    tokens = sentence.tokens if isinstance(sentence, TokenizedSentence) else sentence
    windows = find_windows(tokens, significant, gap_limit)
    return max((w.score for w in windows), default=0.0)


def significant_words(
    content: Sequence[Sequence[str]], ratio: float = DEFAULT_SIGNIFICANCE_RATIO
) -> frozenset[str]:
    """Top ceil(ratio x vocabulary) words by document count, at least one.

    Count ties go to the lexicographically smaller word.
    """
    counts: Counter = Counter()
    for tokens in content:
        counts.update(tokens)
    if not counts:
        return frozenset()
    size = max(1, math.ceil(ratio * len(counts)))
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return frozenset(word for word, _ in ranked[:size])


class LuhnSummarizer(Summarizer):
    """Score sentences by their densest cluster of significant words.

    Significance is decided on stopword-free tokens; windows are measured on
    the full token sequence, where stopwords count as gap tokens.
    """

    algorithm = Algorithm.LUHN

    def __init__(
        self,
        stopwords: Optional[AbstractSet[str]] = None,
        significance_ratio: float = DEFAULT_SIGNIFICANCE_RATIO,
        gap_limit: int = DEFAULT_GAP_LIMIT,
    ):
        super().__init__(stopwords)
        if not 0.0 < significance_ratio <= 1.0:
            raise ValueError(f"significance_ratio must be in (0, 1], got {significance_ratio}")
        if gap_limit < 0:
            raise ValueError(f"gap_limit must be >= 0, got {gap_limit}")
        self.significance_ratio = significance_ratio
        self.gap_limit = gap_limit

    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        significant = significant_words(
            [self.content_tokens(s) for s in sentences], self.significance_ratio
        )
        scores = [luhn_sentence_score(s, significant, self.gap_limit) for s in sentences]
        return Ranking(selected=select_top_k(scores, k), scores=dict(enumerate(scores)))
