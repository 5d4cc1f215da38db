"""Deterministic text preprocessing.

Sentence segmentation, token normalization, stopword filtering, n-gram
extraction, frequency tables and IDF. Everything here is a pure function of
its inputs.
"""

import csv
import io
import logging
import math
import os
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import AbstractSet, Iterable, Optional, Sequence

from ..errors import EmptyUnitListError, InvalidNError, StopwordEncodingError

logger = logging.getLogger(__name__)

Token = str
NGram = tuple[str, ...]
StopwordList = frozenset

STOPWORDS_ENV = 'SUMMARAX_STOPWORDS'
BUNDLED_STOPWORDS = Path(__file__).parent.parent / 'data' / 'stopwords.txt'

# Lowercased words whose trailing period never ends a sentence
ABBREVIATIONS = frozenset({
    'al.', 'approx.', 'ca.', 'cf.', 'ch.', 'co.', 'dr.', 'e.g.', 'eq.', 'eqs.',
    'fig.', 'figs.', 'i.e.', 'inc.', 'jr.', 'ltd.', 'mr.', 'mrs.', 'ms.', 'no.',
    'pp.', 'prof.', 'ref.', 'refs.', 'resp.', 'sec.', 'sr.', 'st.', 'tab.', 'viz.',
    'vol.', 'vs.',
})

# Terminator run plus any closing quotes/brackets, followed by whitespace
_BOUNDARY_RE = re.compile(r'[.!?]+[\'")\]’”]*(?=\s)')
_OPENERS = '(["\'‘“'


@dataclass(frozen=True)
class SentenceSpan:
    """A sentence as a verbatim slice ``source[start:end]``."""
    start: int
    end: int
    text: str


@dataclass(frozen=True)
class TokenizedSentence:
    """Normalized tokens of one sentence plus its position in the source."""
    index: int
    tokens: tuple[Token, ...]
    raw: str
    start: int = 0
    end: int = 0


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith('P')


def _trimmed_span(text: str, start: int, end: int) -> Optional[SentenceSpan]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start == end:
        return None
    return SentenceSpan(start, end, text[start:end])


def _is_abbreviation(text: str, period_pos: int) -> bool:
    """True when the period at ``period_pos`` closes a known abbreviation."""
    word_start = period_pos
    while word_start > 0 and not text[word_start - 1].isspace():
        word_start -= 1
    word = text[word_start:period_pos + 1].lstrip(_OPENERS).lower()
    # "et al." is two words; matching "al." is enough
    return word in ABBREVIATIONS


def split_sentences(text: str) -> list[SentenceSpan]:
    """Split text into sentence spans.

    A boundary follows ``.``, ``!`` or ``?`` (plus optional closing quotes or
    brackets) when whitespace and then an uppercase letter or digit come
    next, unless the period closes a bundled abbreviation.

    >>> [s.text for s in split_sentences("Alloys are strong. They resist heat.")]
    ['Alloys are strong.', 'They resist heat.']
    >>> [s.text for s in split_sentences("Dr. Smith et al. studied HEAs.")]
    ['Dr. Smith et al. studied HEAs.']
    >>> split_sentences("")
    []
    """
    spans: list[SentenceSpan] = []
    cursor = 0
    length = len(text)

    for match in _BOUNDARY_RE.finditer(text):
        nxt = match.end()
        while nxt < length and text[nxt].isspace():
            nxt += 1
        if nxt >= length:
            break
        if not (text[nxt].isupper() or text[nxt].isdigit()):
            continue

        run = match.group(0).rstrip('\'")]’”')
        if run == '.' and _is_abbreviation(text, match.start()):
            continue

        span = _trimmed_span(text, cursor, match.end())
        if span is not None:
            spans.append(span)
        cursor = match.end()

    tail = _trimmed_span(text, cursor, length)
    if tail is not None:
        spans.append(tail)
    return spans


def tokenize(raw_sentence: str, keep_punctuation: bool = False) -> list[Token]:
    """Split on whitespace, strip edge punctuation, lowercase.

    Internal hyphens and numerals survive. With ``keep_punctuation`` the
    stripped punctuation characters are emitted as tokens of their own.

    >>> tokenize("High-entropy alloys (HEAs)!")
    ['high-entropy', 'alloys', 'heas']
    >>> tokenize("(HEAs)!", keep_punctuation=True)
    ['(', 'heas', ')', '!']
    """
    tokens: list[Token] = []
    for piece in raw_sentence.split():
        lead = 0
        while lead < len(piece) and _is_punct(piece[lead]):
            lead += 1
        trail = len(piece)
        while trail > lead and _is_punct(piece[trail - 1]):
            trail -= 1

        core = piece[lead:trail].lower()
        if keep_punctuation:
            tokens.extend(piece[:lead])
        if core:
            tokens.append(core)
        if keep_punctuation:
            tokens.extend(piece[trail:])
    return tokens


def prepare_document(text: str) -> list[TokenizedSentence]:
    """Segment and tokenize a document into indexed sentences."""
    return [
        TokenizedSentence(index=i, tokens=tuple(tokenize(span.text)), raw=span.text,
                          start=span.start, end=span.end)
        for i, span in enumerate(split_sentences(text))
    ]


def remove_stopwords(tokens: Iterable[Token], stops: AbstractSet[str]) -> list[Token]:
    """Order-preserving stopword filter.

    >>> remove_stopwords(["the", "alloy", "of", "steel"], {"the", "of"})
    ['alloy', 'steel']
    """
    return [t for t in tokens if t not in stops]


def parse_stopwords(content: str) -> StopwordList:
    """Parse stopword file content: one token per line, ``#`` comments."""
    words: set[str] = set()
    for line in content.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            words.update(tokenize(line))
    return frozenset(words)


def load_stopwords(path: Optional[str] = None) -> StopwordList:
    """Load a stopword file; the bundled English list when ``path`` is None."""
    source = Path(path) if path else BUNDLED_STOPWORDS
    try:
        with open(source, 'r', encoding='utf-8') as f:
            stops = parse_stopwords(f.read())
    except UnicodeDecodeError as e:
        raise StopwordEncodingError(str(source), e.reason) from e
    logger.debug(f"Loaded {len(stops)} stopwords from {source}")
    return stops


def resolve_stopwords(path: Optional[str] = None) -> tuple[StopwordList, str]:
    """Resolve the stopword source: explicit path, then env var, then bundled.

    Returns the list and a label describing its source.
    """
    path = path or os.environ.get(STOPWORDS_ENV) or None
    if path:
        return load_stopwords(path), str(path)
    return load_stopwords(None), 'bundled'


def _is_numeral(token: Token) -> bool:
    return any(c.isdigit() for c in token) and all(c.isdigit() or c in '.,-' for c in token)


def filter_for_frequency(
    tokens: Iterable[Token],
    stops: AbstractSet[str],
    drop_single_char: bool = False,
) -> list[Token]:
    """Drop stopwords and punctuation, optionally single characters and numerals."""
    kept = []
    for t in tokens:
        if t in stops or all(_is_punct(c) for c in t):
            continue
        if drop_single_char and (len(t) == 1 or _is_numeral(t)):
            continue
        kept.append(t)
    return kept


@dataclass(frozen=True)
class FrequencyTable:
    """Exact token counts."""
    counts: dict[Token, int] = field(default_factory=dict)
    total: int = 0

    def most_common(self, k: Optional[int] = None) -> list[tuple[Token, int]]:
        """Tokens by descending count, ties broken lexicographically.

        >>> build_frequency_table(["a", "b", "a", "c", "b"]).most_common(2)
        [('a', 2), ('b', 2)]
        """
        ordered = sorted(self.counts.items(), key=lambda item: (-item[1], item[0]))
        return ordered if k is None else ordered[:k]

    def to_dict(self, k: Optional[int] = None) -> dict[Token, int]:
        return dict(self.most_common(k))

    def to_csv(self, k: Optional[int] = None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['token', 'count'])
        writer.writerows(self.most_common(k))
        return buf.getvalue()


def build_frequency_table(tokens: Iterable[Token]) -> FrequencyTable:
    counts = Counter(tokens)
    return FrequencyTable(counts=dict(counts), total=sum(counts.values()))


def extract_ngrams(tokens: Sequence[Token], n: int) -> Counter:
    """All contiguous length-n windows, with multiplicity.

    >>> extract_ngrams(["a", "a", "a"], 2)
    Counter({('a', 'a'): 2})
    """
    if n < 1:
        raise InvalidNError(f"n must be >= 1, got {n}")
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


@dataclass(frozen=True)
class IdfTable:
    """Smoothed inverse document frequency per word."""
    idf: dict[Token, float]
    unit_count: int

    def __getitem__(self, word: Token) -> float:
        return self.idf[word]

    def __contains__(self, word: object) -> bool:
        return word in self.idf

    def get(self, word: Token, default: Optional[float] = None) -> Optional[float]:
        return self.idf.get(word, default)


def compute_idf(units: Sequence[Sequence[Token]]) -> IdfTable:
    """idf(w) = ln(N / df(w)) + 1 over the given text units.

    >>> round(compute_idf([["alloy", "steel"], ["alloy"]])["steel"], 4)
    1.6931
    """
    if not units:
        raise EmptyUnitListError("compute_idf needs at least one unit")
    n_units = len(units)
    df: Counter = Counter()
    for unit in units:
        df.update(set(unit))
    idf = {w: math.log(n_units / count) + 1.0 for w, count in sorted(df.items())}
    return IdfTable(idf=idf, unit_count=n_units)
