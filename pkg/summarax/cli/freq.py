"""Frequency command for summarax CLI."""

import json
import logging
import sys
from typing import Optional

import click

from ..config import pick
from ..utils.text import build_frequency_table, filter_for_frequency, resolve_stopwords, tokenize
from .common import (
    EXIT_IO, config_option, load_config_or_exit, read_input_or_exit, stopwords_option,
    write_output_or_exit,
)

logger = logging.getLogger(__name__)


@click.command()
@click.argument('input_file', type=click.Path(dir_okay=False))
@click.option('--raw', is_flag=True, help='Count every token, punctuation and stopwords included')
@click.option('--top', type=click.IntRange(min=1), default=None, help='Keep only the N most frequent')
@click.option('--drop-single-char/--keep-single-char', default=None,
              help='Also drop single characters and numerals [keep]')
@click.option('--format', 'fmt', type=click.Choice(['csv', 'json']), default='csv',
              help='csv (token,count) or json (word-cloud dictionary)')
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
              help='Write to file instead of stdout')
@config_option
@stopwords_option
def freq(
    input_file: str,
    raw: bool,
    top: Optional[int],
    drop_single_char: Optional[bool],
    fmt: str,
    output: Optional[str],
    config: Optional[str],
    stopwords: Optional[str],
):
    """Token frequency distribution of a text file.

    By default stopwords and punctuation are removed; --raw keeps them.

    Example:
        summarax freq abstract.txt --top 20
        summarax freq abstract.txt --raw --format json -o cloud.json
    """
    cfg = load_config_or_exit(config)
    text = read_input_or_exit(input_file)

    if raw:
        tokens = tokenize(text, keep_punctuation=True)
    else:
        try:
            stops, source = resolve_stopwords(pick(stopwords, cfg, 'text', 'stopwords'))
        except OSError as e:
            logger.error(f"Cannot read stopwords: {e}")
            sys.exit(EXIT_IO)
        drop = bool(pick(drop_single_char, cfg, 'text', 'drop_single_char'))
        logger.debug(f"Filtering with {len(stops)} stopwords ({source}), drop_single_char={drop}")
        tokens = filter_for_frequency(tokenize(text), stops, drop_single_char=drop)

    table = build_frequency_table(tokens)
    logger.info(f"{input_file}: {table.total} tokens, {len(table.counts)} distinct")

    if fmt == 'json':
        content = json.dumps(table.to_dict(top), indent=2, ensure_ascii=False) + '\n'
    else:
        content = table.to_csv(top)
    write_output_or_exit(output, content)
