"""Base summarizer and the Summary record."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Optional, Sequence

from ..errors import EmptyDocumentError, InvalidSummaryLengthError
from ..utils.text import TokenizedSentence, load_stopwords, remove_stopwords

logger = logging.getLogger(__name__)

# Scores are compared at this many decimals before the index tie-break
TIE_DECIMALS = 12


class Algorithm(str, Enum):
    TEXTRANK = 'textrank'
    LEXRANK = 'lexrank'
    LUHN = 'luhn'
    LSA = 'lsa'
    KLSUM = 'klsum'


@dataclass(frozen=True)
class Ranking:
    """What a summarizer's ``_rank`` hands back to the base class."""
    selected: list[int]
    scores: dict[int, float]
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class Summary:
    """Selected sentences, in original order, with per-sentence scores."""
    algorithm: Algorithm
    selected: tuple[int, ...]
    scores: dict[int, float]
    text: str
    sentences: tuple[str, ...] = ()
    warnings: tuple[str, ...] = field(default=())


def select_top_k(scores: Sequence[float], k: int) -> list[int]:
    """Indices of the k highest scores, ties to the lower index, in original order.

    >>> select_top_k([0.2, 0.9, 0.2, 0.5], 2)
    [1, 3]
    >>> select_top_k([1.0, 1.0, 1.0], 1)
    [0]
    """
    order = sorted(range(len(scores)), key=lambda i: (-round(scores[i], TIE_DECIMALS), i))
    return sorted(order[:k])


class Summarizer(ABC):
    """Base class for extractive summarizers.

    Subclasses implement :meth:`_rank`; :meth:`summarize` validates input,
    clamps k to the sentence count and assembles the :class:`Summary`.
    """

    algorithm: Algorithm

    def __init__(self, stopwords: Optional[AbstractSet[str]] = None):
        self.stopwords = frozenset(stopwords) if stopwords is not None else load_stopwords()

    def content_tokens(self, sentence: TokenizedSentence) -> list[str]:
        """Sentence tokens with stopwords removed."""
        return remove_stopwords(sentence.tokens, self.stopwords)

    def summarize(self, sentences: Sequence[TokenizedSentence], k: int) -> Summary:
        """Select min(k, n) sentences of the document.

        Args:
            sentences: Document sentences as produced by ``prepare_document``
            k: Requested number of sentences (>= 1)

        Returns:
            Summary with indices in original order
        """
        if k < 1:
            raise InvalidSummaryLengthError(f"k must be >= 1, got {k}")
        if not sentences:
            raise EmptyDocumentError("Document has no sentences")

        target = min(k, len(sentences))
        ranking = self._rank(sentences, target)

        selected = tuple(sorted(ranking.selected))
        if len(selected) != target or len(set(selected)) != target:
            raise RuntimeError(
                f"{self.algorithm.value} selected {len(selected)} sentences, expected {target}"
            )
        for message in ranking.warnings:
            logger.warning(f"{self.algorithm.value}: {message}")

        raws = tuple(sentences[i].raw for i in selected)
        return Summary(
            algorithm=self.algorithm,
            selected=selected,
            scores=dict(sorted(ranking.scores.items())),
            text=' '.join(raws),
            sentences=raws,
            warnings=ranking.warnings,
        )

    @abstractmethod
    def _rank(self, sentences: Sequence[TokenizedSentence], k: int) -> Ranking:
        """Score sentences and pick exactly ``k`` indices (1 <= k <= n)."""
