"""Options, exit codes and config plumbing shared by the subcommands."""

import copy
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click

from ..config import LEXRANK_MODES, ConfigError, SummarizerSettings, load_config
from ..errors import CorpusEncodingError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CORPUS = 3

# Flag name -> (config section, config key)
SUMMARIZER_FLAGS = {
    'damping': ('rank', 'damping'),
    'lexrank_mode': ('lexrank', 'mode'),
    'lexrank_threshold': ('lexrank', 'threshold'),
    'luhn_ratio': ('luhn', 'significance_ratio'),
    'luhn_gap': ('luhn', 'gap_limit'),
    'kl_epsilon': ('klsum', 'epsilon'),
}

config_option = click.option(
    '-c', '--config', type=click.Path(dir_okay=False), default=None,
    help='Config file (.toml or .json); flags win on conflict',
)
stopwords_option = click.option(
    '--stopwords', type=click.Path(dir_okay=False), default=None,
    help='Stopword file, one word per line (default: $SUMMARAX_STOPWORDS, then bundled list)',
)


def summarizer_options(func: Callable) -> Callable:
    """Attach the per-algorithm tuning flags."""
    options = [
        click.option('--damping', type=click.FloatRange(0, 1, min_open=True, max_open=True),
                     default=None, help='Damping factor for TextRank/LexRank [0.85]'),
        click.option('--lexrank-mode', type=click.Choice(LEXRANK_MODES), default=None,
                     help='LexRank edge weights [continuous]'),
        click.option('--lexrank-threshold', type=click.FloatRange(0, 1), default=None,
                     help='Cosine cut for threshold mode [0.1]'),
        click.option('--luhn-ratio', type=click.FloatRange(0, 1, min_open=True), default=None,
                     help='Share of vocabulary treated as significant by Luhn [0.1]'),
        click.option('--luhn-gap', type=click.IntRange(min=0), default=None,
                     help='Max non-significant tokens inside a Luhn window [4]'),
        click.option('--kl-epsilon', type=click.FloatRange(min=0, min_open=True), default=None,
                     help='Probability floor for KL-Sum [1e-12]'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def load_config_or_exit(config_path: Optional[str]) -> dict[str, Any]:
    try:
        return load_config(config_path)
    except ConfigError as e:
        logger.error(str(e))
        sys.exit(EXIT_USAGE)


def apply_flags(cfg: dict[str, Any], flags: dict[tuple[str, str], Any]) -> dict[str, Any]:
    """Copy of ``cfg`` with every non-None flag written into its section."""
    merged = copy.deepcopy(cfg)
    for (section, key), value in flags.items():
        if value is not None:
            merged.setdefault(section, {})[key] = value
    return merged


def summarizer_settings(cfg: dict[str, Any], **flags: Any) -> SummarizerSettings:
    """Summarizer settings from config plus the tuning flags."""
    overlay = {SUMMARIZER_FLAGS[name]: value for name, value in flags.items()}
    try:
        return SummarizerSettings.from_config(apply_flags(cfg, overlay))
    except (TypeError, ValueError) as e:
        logger.error(f"Invalid summarizer settings: {e}")
        sys.exit(EXIT_USAGE)


def read_input_or_exit(path: str) -> str:
    """Read a UTF-8 input file; exit with the I/O code on failure."""
    from ..core.corpus import read_text

    try:
        return read_text(Path(path))
    except (OSError, CorpusEncodingError) as e:
        logger.error(f"Cannot read {path}: {e}")
        sys.exit(EXIT_IO)


def write_output_or_exit(path: Optional[str], content: str) -> None:
    """Write UTF-8 text with ``\\n`` line endings to ``path``, or stdout when None."""
    if path is None:
        click.echo(content, nl=False)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(content)
    except OSError as e:
        logger.error(f"Cannot write {path}: {e}")
        sys.exit(EXIT_IO)
    logger.info(f"Wrote: {path}")
