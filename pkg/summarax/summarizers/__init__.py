"""Extractive summarizers and their factory."""

from typing import AbstractSet, Optional

from ..config import SummarizerSettings
from ..utils.text import prepare_document
from .base import Algorithm, Ranking, Summarizer, Summary, select_top_k
from .graph import SentenceGraph
from .textrank import TextRankSummarizer, overlap_similarity
from .lexrank import LexRankSummarizer, SentenceVector, idf_modified_cosine, sentence_vector
from .luhn import LuhnSummarizer, LuhnWindow, find_windows, luhn_sentence_score, significant_words
from .lsa import LsaSummarizer, term_sentence_matrix
from .klsum import KLSummarizer

ALGORITHMS: dict[Algorithm, type[Summarizer]] = {
    Algorithm.TEXTRANK: TextRankSummarizer,
    Algorithm.LEXRANK: LexRankSummarizer,
    Algorithm.LUHN: LuhnSummarizer,
    Algorithm.LSA: LsaSummarizer,
    Algorithm.KLSUM: KLSummarizer,
}


def create_summarizer(
    algorithm: Algorithm | str,
    settings: Optional[SummarizerSettings] = None,
    stopwords: Optional[AbstractSet[str]] = None,
) -> Summarizer:
    """Build a summarizer for ``algorithm`` from shared settings."""
    algorithm = Algorithm(algorithm)
    settings = settings or SummarizerSettings()

    if algorithm is Algorithm.TEXTRANK:
        return TextRankSummarizer(stopwords, rank=settings.rank)
    if algorithm is Algorithm.LEXRANK:
        return LexRankSummarizer(
            stopwords, rank=settings.rank,
            mode=settings.lexrank_mode, threshold=settings.lexrank_threshold,
        )
    if algorithm is Algorithm.LUHN:
        return LuhnSummarizer(
            stopwords,
            significance_ratio=settings.luhn_significance_ratio,
            gap_limit=settings.luhn_gap_limit,
        )
    if algorithm is Algorithm.LSA:
        return LsaSummarizer(stopwords)
    return KLSummarizer(stopwords, epsilon=settings.kl_epsilon)


def summarize_text(
    text: str,
    algorithm: Algorithm | str = Algorithm.TEXTRANK,
    k: int = 3,
    settings: Optional[SummarizerSettings] = None,
    stopwords: Optional[AbstractSet[str]] = None,
) -> Summary:
    """Segment ``text`` and summarize it in one call."""
    return create_summarizer(algorithm, settings, stopwords).summarize(prepare_document(text), k)


__all__ = [
    'Algorithm', 'ALGORITHMS', 'Ranking', 'Summarizer', 'Summary', 'select_top_k',
    'SentenceGraph', 'SentenceVector', 'LuhnWindow',
    'TextRankSummarizer', 'LexRankSummarizer', 'LuhnSummarizer', 'LsaSummarizer', 'KLSummarizer',
    'overlap_similarity', 'idf_modified_cosine', 'sentence_vector',
    'find_windows', 'luhn_sentence_score', 'significant_words', 'term_sentence_matrix',
    'create_summarizer', 'summarize_text',
]
