"""Evaluate command for summarax CLI."""

import logging
import sys
from typing import Optional

import click

from ..config import ALGORITHM_NAMES, pick
from ..core.corpus import load_corpus, load_sample_corpus, require_paired
from ..core.report import BLEU_REFERENCES, EvalConfig, emit_report, evaluate_corpus, format_ranking_table
from ..errors import (
    CorpusEncodingError, CorpusError, DocumentEvaluationError, UnpairedDocumentsError,
)
from .common import (
    EXIT_CORPUS, EXIT_IO, EXIT_USAGE, config_option, load_config_or_exit, stopwords_option,
    summarizer_options, summarizer_settings,
)

logger = logging.getLogger(__name__)

SAMPLE_NAME = 'sample'


def parse_algorithms(ctx, param, value: Optional[str]) -> Optional[list[str]]:
    """Parse a comma-separated algorithm list, keeping first occurrences."""
    if value is None:
        return None
    names: list[str] = []
    for name in (part.strip().lower() for part in value.split(',')):
        if not name:
            continue
        if name not in ALGORITHM_NAMES:
            raise click.BadParameter(
                f"unknown algorithm '{name}' (choose from {', '.join(ALGORITHM_NAMES)})"
            )
        if name not in names:
            names.append(name)
    if not names:
        raise click.BadParameter("at least one algorithm is required")
    return names


def _write_bytes(path: str, data: bytes) -> None:
    try:
        with open(path, 'wb') as f:
            f.write(data)
    except OSError as e:
        logger.error(f"Cannot write {path}: {e}")
        sys.exit(EXIT_IO)
    logger.info(f"Wrote: {path}")


@click.command()
@click.argument('corpus_dir')
@click.option('-o', '--output', type=click.Path(dir_okay=False), required=True,
              help='JSON report path')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None,
              help='Also write the per-algorithm summary as CSV')
@click.option('--algos', callback=parse_algorithms, default=None,
              help='Comma-separated algorithms [all five]')
@click.option('-k', type=click.IntRange(min=1), default=None, help='Sentences per summary [3]')
@click.option('--rouge-n', type=click.IntRange(1, 4), default=None, help='ROUGE n-gram order [1]')
@click.option('--bleu-max-n', type=click.IntRange(1, 9), default=None,
              help='Highest n-gram order in composite BLEU [4]')
@click.option('--bleu-reference', type=click.Choice(BLEU_REFERENCES), default=None,
              help='Compare BLEU against the reference summary or the source text [reference]')
@click.option('--smoothing-epsilon', type=click.FloatRange(min=0, min_open=True), default=None,
              help='Floor n-gram precisions before averaging [off]')
@click.option('--workers', '-j', type=click.IntRange(min=1), default=None,
              help='Parallel evaluation workers; output does not depend on it [1]')
@config_option
@stopwords_option
@summarizer_options
def evaluate(
    corpus_dir: str,
    output: str,
    csv_path: Optional[str],
    algos: Optional[list[str]],
    k: Optional[int],
    rouge_n: Optional[int],
    bleu_max_n: Optional[int],
    bleu_reference: Optional[str],
    smoothing_epsilon: Optional[float],
    workers: Optional[int],
    config: Optional[str],
    stopwords: Optional[str],
    **knobs,
):
    """Score every algorithm on a corpus of documents and reference summaries.

    CORPUS_DIR holds docs/<id>.txt and refs/<id>.txt; pass "sample" for the
    bundled corpus of 20 abstracts.

    Example:
        summarax evaluate sample -o report.json
        summarax evaluate ./corpus -o report.json --csv report.csv --algos luhn,klsum --workers 4
    """
    cfg = load_config_or_exit(config)
    algorithms = algos or list(pick(None, cfg, 'evaluate', 'algorithms'))
    unknown = [a for a in algorithms if a not in ALGORITHM_NAMES]
    if unknown:
        logger.error(f"Unknown algorithm(s) in config: {', '.join(unknown)}")
        sys.exit(EXIT_USAGE)
    workers = int(pick(workers, cfg, 'evaluate', 'workers'))

    try:
        eval_config = EvalConfig.from_config(
            cfg,
            k=k,
            rouge_n=rouge_n,
            bleu_max_n=bleu_max_n,
            bleu_reference=bleu_reference,
            smoothing_epsilon=smoothing_epsilon,
            stopwords_path=stopwords,
            summarizer=summarizer_settings(cfg, **knobs),
        )
    except (TypeError, ValueError) as e:
        logger.error(f"Invalid evaluation settings: {e}")
        sys.exit(EXIT_USAGE)

    try:
        corpus = load_sample_corpus() if corpus_dir == SAMPLE_NAME else load_corpus(corpus_dir)
        require_paired(corpus)
    except UnpairedDocumentsError as e:
        logger.error(f"Documents without reference summaries: {', '.join(e.ids)}")
        click.echo(f"Unpaired documents: {', '.join(e.ids)}", err=True)
        sys.exit(EXIT_CORPUS)
    except CorpusEncodingError as e:
        logger.error(str(e))
        sys.exit(EXIT_IO)
    except CorpusError as e:
        logger.error(str(e))
        click.echo(f"Corpus error: {e}", err=True)
        sys.exit(EXIT_CORPUS)
    except OSError as e:
        logger.error(f"Cannot read corpus {corpus_dir}: {e}")
        sys.exit(EXIT_IO)

    try:
        report = evaluate_corpus(corpus, algorithms, eval_config, workers=workers)
    except DocumentEvaluationError as e:
        logger.error(str(e))
        sys.exit(EXIT_CORPUS)
    except OSError as e:
        logger.error(f"Cannot read stopwords: {e}")
        sys.exit(EXIT_IO)

    _write_bytes(output, emit_report(report, 'json'))
    if csv_path:
        _write_bytes(csv_path, emit_report(report, 'csv'))

    click.echo(format_ranking_table(report), nl=False)
