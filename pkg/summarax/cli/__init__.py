"""Command-line interface for summarax.

One module per subcommand; shared options and exit codes live in ``common``.
"""

import logging
import sys

import click

from .. import __version__
from .common import EXIT_USAGE
from .summarize import summarize
from .evaluate import evaluate
from .freq import freq


class SummaraxGroup(click.Group):
    """Click group that reports usage errors with exit code 1 instead of 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        if isinstance(rv, int) and rv != 0:
            sys.exit(rv)
        return rv


@click.group(cls=SummaraxGroup)
@click.version_option(version=__version__)
@click.option('-v', '--verbose', count=True, help='-v for info, -vv for debug')
def main(verbose: int):
    """Extractive summarization (TextRank, LexRank, Luhn, LSA, KL-Sum) with BLEU/ROUGE evaluation."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
        force=True,
    )


main.add_command(summarize)
main.add_command(evaluate)
main.add_command(freq)


__all__ = ['main']


if __name__ == '__main__':
    main()
