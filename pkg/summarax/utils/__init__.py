"""Text preprocessing utilities."""

from .text import (
    SentenceSpan, TokenizedSentence, FrequencyTable, IdfTable,
    split_sentences, tokenize, prepare_document, remove_stopwords,
    load_stopwords, resolve_stopwords, parse_stopwords, filter_for_frequency,
    build_frequency_table, extract_ngrams, compute_idf,
)

__all__ = [
    'SentenceSpan', 'TokenizedSentence', 'FrequencyTable', 'IdfTable',
    'split_sentences', 'tokenize', 'prepare_document', 'remove_stopwords',
    'load_stopwords', 'resolve_stopwords', 'parse_stopwords', 'filter_for_frequency',
    'build_frequency_table', 'extract_ngrams', 'compute_idf',
]
