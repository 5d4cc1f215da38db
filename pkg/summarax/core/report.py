"""Evaluation matrix (documents x algorithms x metrics) and its reports."""

import copy
import csv
import io
import json
import logging
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import AbstractSet, Any, Callable, Iterable, Optional, Sequence

from tqdm.auto import tqdm

from ..config import SummarizerSettings, pick
from ..errors import DocumentEvaluationError, UnsupportedFormatError
from ..summarizers import Algorithm, Summarizer, create_summarizer
from ..utils.text import TokenizedSentence, prepare_document, resolve_stopwords, tokenize
from .corpus import Corpus, require_paired
from .metrics import BleuBreakdown, RougeScore, bleu_score, individual_bleu, rouge_n

logger = logging.getLogger(__name__)

INDIVIDUAL_BLEU_ORDERS = (1, 2, 3, 4)
BLEU_REFERENCES = ('reference', 'source')
REPORT_FORMATS = ('json', 'csv')
CSV_COLUMNS = [
    'algorithm', 'recall', 'precision', 'f1',
    'bleu1', 'bleu2', 'bleu3', 'bleu4', 'bleu4_composite',
]
DISPLAY_NAMES = {
    Algorithm.TEXTRANK: 'TextRank',
    Algorithm.LEXRANK: 'LexRank',
    Algorithm.LUHN: 'Luhn',
    Algorithm.LSA: 'LSA',
    Algorithm.KLSUM: 'KL-Sum',
}


@dataclass(frozen=True)
class EvalConfig:
    """Everything that shapes an evaluation run (worker count excluded)."""
    k: int = 3
    rouge_n: int = 1
    bleu_max_n: int = 4
    bleu_reference: str = 'reference'
    smoothing_epsilon: Optional[float] = None
    stopwords_path: Optional[str] = None
    summarizer: SummarizerSettings = field(default_factory=SummarizerSettings)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 1 <= self.rouge_n <= 4:
            raise ValueError(f"rouge_n must be in [1, 4], got {self.rouge_n}")
        if not 1 <= self.bleu_max_n <= 9:
            raise ValueError(f"bleu_max_n must be in [1, 9], got {self.bleu_max_n}")
        if self.bleu_reference not in BLEU_REFERENCES:
            raise ValueError(f"bleu_reference must be one of {BLEU_REFERENCES}")

    @classmethod
    def from_config(cls, cfg: dict[str, Any], **overrides: Any) -> 'EvalConfig':
        """Build from a merged config dict; non-None overrides win."""
        return cls(
            k=int(pick(overrides.get('k'), cfg, 'summarize', 'k')),
            rouge_n=int(pick(overrides.get('rouge_n'), cfg, 'metrics', 'rouge_n')),
            bleu_max_n=int(pick(overrides.get('bleu_max_n'), cfg, 'metrics', 'bleu_max_n')),
            bleu_reference=str(pick(overrides.get('bleu_reference'), cfg, 'metrics', 'bleu_reference')),
            smoothing_epsilon=pick(overrides.get('smoothing_epsilon'), cfg, 'metrics', 'smoothing_epsilon'),
            stopwords_path=pick(overrides.get('stopwords_path'), cfg, 'text', 'stopwords'),
            summarizer=overrides.get('summarizer') or SummarizerSettings.from_config(cfg),
        )


@dataclass(frozen=True)
class DocumentScore:
    """Metrics of one algorithm's summary of one document."""
    doc_id: str
    algorithm: Algorithm
    selected: tuple[int, ...]
    rouge: RougeScore
    bleu: BleuBreakdown
    individual_bleu: tuple[float, ...]


@dataclass(frozen=True)
class AlgorithmAggregate:
    """Macro averages over documents for one algorithm."""
    algorithm: Algorithm
    mean_recall: float
    mean_precision: float
    mean_f1: float
    mean_bleu: tuple[float, ...]
    mean_precisions: tuple[float, ...]
    bleu_composite: float
    per_document: dict[str, DocumentScore]


@dataclass(frozen=True)
class EvalReport:
    config: dict[str, Any]
    corpus: dict[str, Any]
    aggregates: tuple[AlgorithmAggregate, ...]
    ranking: tuple[Algorithm, ...]

    def aggregate(self, algorithm: Algorithm | str) -> AlgorithmAggregate:
        algorithm = Algorithm(algorithm)
        for agg in self.aggregates:
            if agg.algorithm is algorithm:
                return agg
        raise KeyError(algorithm.value)


@dataclass(frozen=True)
class _Task:
    doc_id: str
    algorithm: Algorithm
    sentences: tuple[TokenizedSentence, ...]
    source_tokens: tuple[str, ...]
    reference_tokens: tuple[str, ...]


def _mean(values: Iterable[float]) -> float:
    values = list(values)
    return math.fsum(values) / len(values)


def score_summary(
    summary_text: str,
    reference_tokens: Sequence[str],
    bleu_target: Sequence[str],
    config: EvalConfig,
) -> tuple[RougeScore, BleuBreakdown, tuple[float, ...]]:
    """ROUGE against the reference, BLEU against ``bleu_target``."""
    candidate = tokenize(summary_text)
    rouge = rouge_n(candidate, reference_tokens, config.rouge_n)
    bleu = bleu_score(
        candidate, bleu_target, max_n=config.bleu_max_n,
        smoothing_epsilon=config.smoothing_epsilon,
    )
    individual = tuple(individual_bleu(candidate, bleu_target, n) for n in INDIVIDUAL_BLEU_ORDERS)
    return rouge, bleu, individual


def _run_task(task: _Task, summarizer: Summarizer, config: EvalConfig) -> DocumentScore:
    try:
        summary = summarizer.summarize(task.sentences, config.k)
        target = task.reference_tokens if config.bleu_reference == 'reference' else task.source_tokens
        rouge, bleu, individual = score_summary(summary.text, task.reference_tokens, target, config)
    except Exception as e:
        raise DocumentEvaluationError(task.doc_id, task.algorithm.value, e) from e
    logger.debug(f"{task.doc_id}/{task.algorithm.value}: f1={rouge.f1:.4f} bleu={bleu.score:.4f}")
    return DocumentScore(
        doc_id=task.doc_id,
        algorithm=task.algorithm,
        selected=summary.selected,
        rouge=rouge,
        bleu=bleu,
        individual_bleu=individual,
    )


def _aggregate(algorithm: Algorithm, scores: list[DocumentScore]) -> AlgorithmAggregate:
    max_n = scores[0].bleu.max_n
    return AlgorithmAggregate(
        algorithm=algorithm,
        mean_recall=_mean(s.rouge.recall for s in scores),
        mean_precision=_mean(s.rouge.precision for s in scores),
        mean_f1=_mean(s.rouge.f1 for s in scores),
        mean_bleu=tuple(
            _mean(s.individual_bleu[i] for s in scores) for i in range(len(INDIVIDUAL_BLEU_ORDERS))
        ),
        mean_precisions=tuple(_mean(s.bleu.precisions[i] for s in scores) for i in range(max_n)),
        bleu_composite=_mean(s.bleu.score for s in scores),
        per_document={s.doc_id: s for s in sorted(scores, key=lambda s: s.doc_id)},
    )


def rank_algorithms(aggregates: Iterable[AlgorithmAggregate]) -> tuple[Algorithm, ...]:
    """Descending mean F1; ties by algorithm name."""
    ordered = sorted(aggregates, key=lambda a: (-round(a.mean_f1, 12), a.algorithm.value))
    return tuple(a.algorithm for a in ordered)


def evaluate_corpus(
    corpus: Corpus,
    algorithms: Iterable[Algorithm | str],
    config: Optional[EvalConfig] = None,
    stopwords: Optional[AbstractSet[str]] = None,
    workers: int = 1,
) -> EvalReport:
    """Summarize every document with every algorithm and score the summaries.

    The result does not depend on ``workers`` or on document order: tasks are
    merged by (document id, algorithm name).
    """
    config = config or EvalConfig()
    selected = sorted({Algorithm(a) for a in algorithms}, key=lambda a: a.value)
    if not selected:
        raise ValueError("At least one algorithm must be selected")
    require_paired(corpus)

    stopword_source = 'custom'
    if stopwords is None:
        stopwords, stopword_source = resolve_stopwords(config.stopwords_path)
    summarizers = {a: create_summarizer(a, config.summarizer, stopwords) for a in selected}

    tasks = []
    for doc in sorted(corpus, key=lambda d: d.id):
        sentences = tuple(prepare_document(doc.text))
        source_tokens = tuple(tokenize(doc.text))
        reference_tokens = tuple(tokenize(corpus.reference(doc.id)))
        for algorithm in selected:
            tasks.append(_Task(doc.id, algorithm, sentences, source_tokens, reference_tokens))

    logger.info(f"Evaluating {len(corpus)} documents x {len(selected)} algorithms "
                f"({len(tasks)} tasks, {workers} worker(s))")

    def run(task: _Task) -> DocumentScore:
        return _run_task(task, summarizers[task.algorithm], config)

    with tqdm(total=len(tasks), desc="Evaluating", unit=" task", disable=None) as pbar:
        if workers <= 1:
            results = []
            for task in tasks:
                results.append(run(task))
                pbar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = []
                for result in executor.map(run, tasks):
                    results.append(result)
                    pbar.update(1)

    by_algorithm: dict[Algorithm, list[DocumentScore]] = {a: [] for a in selected}
    for result in sorted(results, key=lambda r: (r.doc_id, r.algorithm.value)):
        by_algorithm[result.algorithm].append(result)
    aggregates = tuple(_aggregate(a, by_algorithm[a]) for a in selected)

    return EvalReport(
        config={
            'k': config.k,
            'rouge_n': config.rouge_n,
            'bleu_max_n': config.bleu_max_n,
            'bleu_reference': config.bleu_reference,
            'smoothing_epsilon': config.smoothing_epsilon,
            'stopwords': stopword_source,
            'averaging': 'macro',
            'metric_tokens': 'normalized, stopwords kept',
            'summarizer': config.summarizer.as_dict(),
        },
        corpus={
            'name': Path(corpus.root).name if corpus.root else None,
            'documents': len(corpus),
            'ids': sorted(corpus.ids),
        },
        aggregates=aggregates,
        ranking=rank_algorithms(aggregates),
    )


FIXED_DECIMALS = 6
_FIXED_TAG = '__fixed6__:'
_FIXED_PATTERN = re.compile(r'"' + _FIXED_TAG + r'(-?\d+\.\d{6})"')


def _r(value: Optional[float]) -> Optional[float]:
    """Round to 6 decimals for serialization; -0.0 becomes 0.0."""
    if value is None:
        return None
    return round(value, FIXED_DECIMALS) + 0.0


@dataclass(frozen=True)
class _Fixed:
    """A metric value written as a fixed 6-decimal JSON number."""
    value: float


class _ReportEncoder(json.JSONEncoder):
    def default(self, o: Any) -> Any:
        if isinstance(o, _Fixed):
            return f"{_FIXED_TAG}{_r(o.value):.{FIXED_DECIMALS}f}"
        return super().default(o)


def _document_json(score: DocumentScore, real: Callable[[float], Any]) -> dict[str, Any]:
    bleu = score.bleu
    return {
        'selected': list(score.selected),
        'rouge': {
            'n': score.rouge.n,
            'recall': real(score.rouge.recall),
            'precision': real(score.rouge.precision),
            'f1': real(score.rouge.f1),
        },
        'bleu': {
            'precisions': [real(p) for p in bleu.precisions],
            'weights': [real(w) for w in bleu.weights],
            'geo_avg': real(bleu.geo_avg),
            'candidate_len': bleu.candidate_len,
            'reference_len': bleu.reference_len,
            'brevity_penalty': real(bleu.brevity_penalty),
            'score': real(bleu.score),
        },
        'individual_bleu': [real(b) for b in score.individual_bleu],
    }


def report_to_dict(report: EvalReport, real: Callable[[float], Any] = _r) -> dict[str, Any]:
    """JSON-ready structure with fixed key order.

    Metric values pass through ``real`` (6-decimal rounding by default).
    Config parameters are kept as given so tolerances like 1e-12 survive.
    """
    algorithms = []
    for agg in report.aggregates:
        entry: dict[str, Any] = {
            'algorithm': agg.algorithm.value,
            'recall': real(agg.mean_recall),
            'precision': real(agg.mean_precision),
            'f1': real(agg.mean_f1),
        }
        for n, value in zip(INDIVIDUAL_BLEU_ORDERS, agg.mean_bleu):
            entry[f'bleu{n}'] = real(value)
        entry['bleu4_composite'] = real(agg.bleu_composite)
        entry['ngram_precisions'] = [real(p) for p in agg.mean_precisions]
        entry['documents'] = {
            doc_id: _document_json(s, real) for doc_id, s in agg.per_document.items()
        }
        algorithms.append(entry)

    return {
        'config': copy.deepcopy(report.config),
        'corpus': report.corpus,
        'algorithms': algorithms,
        'ranking': [a.value for a in report.ranking],
    }


def emit_report(report: EvalReport, format: str = 'json') -> bytes:
    """Serialize a report; identical reports give identical bytes.

    JSON metric values are written with exactly six decimals (``1.000000``).
    """
    if format == 'json':
        text = json.dumps(report_to_dict(report, real=_Fixed), indent=2,
                          ensure_ascii=False, cls=_ReportEncoder)
        return (_FIXED_PATTERN.sub(r'\1', text) + '\n').encode('utf-8')
    if format == 'csv':
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for agg in report.aggregates:
            values = [agg.mean_recall, agg.mean_precision, agg.mean_f1, *agg.mean_bleu,
                      agg.bleu_composite]
            writer.writerow([agg.algorithm.value, *(f"{v:.6f}" for v in values)])
        return buf.getvalue().encode('utf-8')
    raise UnsupportedFormatError(f"Unsupported report format: {format!r} (use one of {REPORT_FORMATS})")


def format_ranking_table(report: EvalReport) -> str:
    """Recall / precision / F1 per algorithm in ranking order."""
    lines = [f"{'Algorithm':<12}{'Recall':>8}{'Precision':>11}{'F1-Score':>10}"]
    for algorithm in report.ranking:
        agg = report.aggregate(algorithm)
        lines.append(
            f"{DISPLAY_NAMES[algorithm]:<12}{agg.mean_recall:>8.3f}"
            f"{agg.mean_precision:>11.3f}{agg.mean_f1:>10.3f}"
        )
    return '\n'.join(lines) + '\n'
