"""Summarize command for summarax CLI."""

import logging
import sys
from typing import Optional

import click

from ..config import ALGORITHM_NAMES, pick
from ..errors import EmptyDocumentError, SummaraxError
from ..summarizers import create_summarizer
from ..utils.text import prepare_document, resolve_stopwords
from .common import (
    EXIT_IO, EXIT_USAGE, config_option, load_config_or_exit, read_input_or_exit,
    stopwords_option, summarizer_options, summarizer_settings, write_output_or_exit,
)

logger = logging.getLogger(__name__)


def _one_line(raw: str) -> str:
    """Collapse internal whitespace so a sentence prints on a single line."""
    return ' '.join(raw.split())


@click.command()
@click.argument('input_file', type=click.Path(dir_okay=False))
@click.option('--algo', '-a', type=click.Choice(ALGORITHM_NAMES), default=None,
              help='Summarization algorithm [textrank]')
@click.option('-k', type=click.IntRange(min=1), default=None, help='Number of sentences [3]')
@click.option('--scores', is_flag=True, help='Print index<TAB>score<TAB>sentence')
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
              help='Write to file instead of stdout')
@config_option
@stopwords_option
@summarizer_options
def summarize(
    input_file: str,
    algo: Optional[str],
    k: Optional[int],
    scores: bool,
    output: Optional[str],
    config: Optional[str],
    stopwords: Optional[str],
    **knobs,
):
    """Extract the k most salient sentences of a text file.

    Sentences are printed in their original order, one per line.

    Example:
        summarax summarize abstract.txt --algo luhn -k 2
        summarax summarize abstract.txt --algo lexrank --lexrank-mode threshold --scores
    """
    cfg = load_config_or_exit(config)
    algorithm = pick(algo, cfg, 'summarize', 'algorithm')
    if algorithm not in ALGORITHM_NAMES:
        logger.error(f"Unknown algorithm in config: {algorithm}")
        sys.exit(EXIT_USAGE)
    k = int(pick(k, cfg, 'summarize', 'k'))
    settings = summarizer_settings(cfg, **knobs)

    text = read_input_or_exit(input_file)
    try:
        stops, source = resolve_stopwords(pick(stopwords, cfg, 'text', 'stopwords'))
    except OSError as e:
        logger.error(f"Cannot read stopwords: {e}")
        sys.exit(EXIT_IO)
    logger.info(f"Summarizing {input_file} with {algorithm}, k={k} (stopwords: {source})")

    try:
        summary = create_summarizer(algorithm, settings, stops).summarize(prepare_document(text), k)
    except EmptyDocumentError:
        logger.error(f"No sentences found in {input_file}")
        sys.exit(EXIT_USAGE)
    except (SummaraxError, ValueError) as e:
        logger.error(f"Error: {e}")
        sys.exit(EXIT_USAGE)

    lines = []
    for index, raw in zip(summary.selected, summary.sentences):
        if scores:
            lines.append(f"{index}\t{summary.scores[index]:.6f}\t{_one_line(raw)}")
        else:
            lines.append(_one_line(raw))
    write_output_or_exit(output, '\n'.join(lines) + '\n')
