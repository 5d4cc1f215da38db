"""BLEU and ROUGE-N over token sequences.

Both use clipped n-gram counts: a candidate n-gram matches at most as many
times as it occurs in the reference.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import (
    InvalidNError, InvalidReferenceLengthError, InvalidWeightsError,
    LengthMismatchError, OutOfRangeError,
)
from ..utils.text import extract_ngrams

WEIGHT_TOL = 1e-9


@dataclass(frozen=True)
class BleuBreakdown:
    """Every quantity that goes into a BLEU score."""
    precisions: tuple[float, ...]
    weights: tuple[float, ...]
    geo_avg: float
    candidate_len: int
    reference_len: int
    brevity_penalty: float
    score: float

    @property
    def max_n(self) -> int:
        return len(self.precisions)


@dataclass(frozen=True)
class RougeScore:
    n: int
    recall: float
    precision: float
    f1: float


def _clipped_overlap(candidate: Sequence[str], reference: Sequence[str], n: int) -> tuple[int, int, int]:
    """(clipped matches, candidate n-gram total, reference n-gram total)."""
    cand = extract_ngrams(candidate, n)
    ref = extract_ngrams(reference, n)
    overlap = sum(min(count, ref[gram]) for gram, count in cand.items())
    return overlap, sum(cand.values()), sum(ref.values())


def modified_ngram_precision(candidate: Sequence[str], reference: Sequence[str], n: int) -> float:
    """Clipped n-gram precision; 0 when the candidate has fewer than n tokens.

    >>> modified_ngram_precision("the the the the".split(), "the cat".split(), 1)
    0.25
    """
    if n < 1:
        raise InvalidNError(f"n must be >= 1, got {n}")
    overlap, total, _ = _clipped_overlap(candidate, reference, n)
    return overlap / total if total else 0.0


def _check_weights(weights: Sequence[float]) -> None:
    if not weights or any(w <= 0 or not math.isfinite(w) for w in weights):
        raise InvalidWeightsError(f"Weights must be positive: {list(weights)}")
    if abs(math.fsum(weights) - 1.0) > WEIGHT_TOL:
        raise InvalidWeightsError(f"Weights must sum to 1, got {math.fsum(weights)}")


def geometric_average_precision(precisions: Sequence[float], weights: Sequence[float]) -> float:
    """exp(sum w_n ln p_n); 0 as soon as any p_n is 0.

    >>> round(geometric_average_precision([1.0, 0.5], [0.5, 0.5]), 5)
    0.70711
    """
    if len(precisions) != len(weights):
        raise LengthMismatchError(
            f"{len(precisions)} precisions but {len(weights)} weights"
        )
    _check_weights(weights)
    if any(p <= 0 for p in precisions):
        return 0.0
    return math.exp(math.fsum(w * math.log(p) for w, p in zip(weights, precisions)))


def brevity_penalty(c: int, r: int) -> float:
    """1 if c > r, exp(1 - r/c) if 0 < c <= r, 0 if c == 0.

    >>> round(brevity_penalty(5, 10), 5)
    0.36788
    """
    if r < 1:
        raise InvalidReferenceLengthError(f"Reference length must be >= 1, got {r}")
    if c < 0:
        raise OutOfRangeError(f"Candidate length must be >= 0, got {c}")
    if c == 0:
        return 0.0
    if c > r:
        return 1.0
    return math.exp(1.0 - r / c)


def bleu_score(
    candidate: Sequence[str],
    reference: Sequence[str],
    max_n: int = 4,
    weights: Optional[Sequence[float]] = None,
    smoothing_epsilon: Optional[float] = None,
) -> BleuBreakdown:
    """BLEU = brevity penalty x geometric average of p_1..p_max_n.

    ``weights`` default to uniform. With ``smoothing_epsilon`` each p_n is
    floored at that value before averaging.
    """
    if max_n < 1:
        raise InvalidNError(f"max_n must be >= 1, got {max_n}")
    if weights is None:
        weights = [1.0 / max_n] * max_n
    if len(weights) != max_n:
        raise LengthMismatchError(f"Expected {max_n} weights, got {len(weights)}")

    precisions = [modified_ngram_precision(candidate, reference, n) for n in range(1, max_n + 1)]
    averaged = precisions
    if smoothing_epsilon is not None:
        if smoothing_epsilon <= 0:
            raise OutOfRangeError(f"smoothing_epsilon must be > 0, got {smoothing_epsilon}")
        averaged = [max(p, smoothing_epsilon) for p in precisions]

    geo_avg = geometric_average_precision(averaged, weights)
    bp = brevity_penalty(len(candidate), len(reference))
    return BleuBreakdown(
        precisions=tuple(precisions),
        weights=tuple(weights),
        geo_avg=geo_avg,
        candidate_len=len(candidate),
        reference_len=len(reference),
        brevity_penalty=bp,
        score=bp * geo_avg,
    )


def individual_bleu(candidate: Sequence[str], reference: Sequence[str], n: int) -> float:
    """Brevity penalty x p_n: the score of n-grams of order n alone."""
    return brevity_penalty(len(candidate), len(reference)) * modified_ngram_precision(
        candidate, reference, n
    )


def f1_from(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0.

    >>> round(f1_from(0.423, 1.0), 3)
    0.595
    """
    for name, value in (('precision', precision), ('recall', recall)):
        if not 0.0 <= value <= 1.0:
            raise OutOfRangeError(f"{name} must be in [0, 1], got {value}")
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def rouge_n(model: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    """ROUGE-N recall, precision and F1 from clipped n-gram overlap.

    >>> s = rouge_n("the cat sat on the mat".split(), "the cat on mat".split())
    >>> (s.recall, round(s.precision, 4), round(s.f1, 4))
    (1.0, 0.6667, 0.8)
    """
    if n < 1:
        raise InvalidNError(f"n must be >= 1, got {n}")
    overlap, model_total, ref_total = _clipped_overlap(model, reference, n)
    recall = overlap / ref_total if ref_total else 0.0
    precision = overlap / model_total if model_total else 0.0
    return RougeScore(n=n, recall=recall, precision=precision, f1=f1_from(precision, recall))
