"""
Command-line interface for farahidy

Exit codes: 0 success, 1 input/format error, 2 root not found.
Records go to standard output one per line; diagnostics and logs go to
the error stream.
"""

import argparse
import io
import logging
import sys
from typing import List, Optional, Sequence

from jinja2 import TemplateError
from rich.console import Console
from rich.logging import RichHandler

from . import __version__, combinatorics
from .combinatorics import LetterSet, enumerate_permutations
from .config import ConfigManager
from .errors import ConfigError, FarahidyError, IndexOutOfRange, NotFound
from .indexer import ROOT_LENGTHS, RootWord, decode, digit_vector, encode, word_length_of
from .reports import ReportRenderer
from .store import MappedLexicon, RecordSourceManager, build, distinct_letters_only, load, save
from .utils import ensure_parent_directory, format_error_message, parse_index

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FOUND = 2

COMMAND_ERRORS = (FarahidyError, OSError, ValueError, TemplateError)


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors exit 1; argparse's default 2 is reserved for not-found."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class CliContext:
    """Consoles, configuration and display style for one invocation."""

    def __init__(self, config_manager: Optional[ConfigManager] = None, style: Optional[str] = None):
        self.config_manager = config_manager or ConfigManager()
        self.console = Console(highlight=False)
        self.err_console = Console(stderr=True, highlight=False)
        self.style = style or self.config_manager.get_display_style()

    @property
    def templates(self):
        return self.config_manager.template_engine

    def error(self, error: Exception, context: str) -> None:
        self.err_console.print(format_error_message(error, context), style='bold red',
                               markup=False, soft_wrap=True)

    def message(self, text: str) -> None:
        self.err_console.print(text, markup=False, soft_wrap=True)

    def emit(self, title: str, columns: Sequence[str], rows: Sequence[Sequence],
             lines: Optional[List[str]] = None) -> None:
        ReportRenderer.render_report(
            self.console, self.style, title, columns, rows,
            config=self.config_manager.get_display_config(), lines=lines,
        )

    def resolve_lexicon(self, path: Optional[str]) -> str:
        path = path or self.config_manager.get_lexicon_path()
        if not path:
            raise ConfigError("No lexicon given: pass --lexicon or set 'lexicon' in the config")
        return path


def _stats_rows(lexicon) -> List[list]:
    summary = lexicon.stats()
    rows = [[r, summary.by_length[r], summary.distinct_by_length[r]] for r in ROOT_LENGTHS]
    rows.append(['total', summary.total, sum(summary.distinct_by_length.values())])
    return rows


STATS_COLUMNS = ('length', 'entries', 'distinct')


def cmd_build(ctx: CliContext, input_path: str, output_path: str, distinct_only: bool = False) -> int:
    """Build a binary lexicon from a TSV or YAML corpus."""
    try:
        records = RecordSourceManager.read_records(input_path)
        record_filter = distinct_letters_only if distinct_only else None
        lexicon = build(records, record_filter=record_filter)
        ensure_parent_directory(output_path)
        save(lexicon, output_path)
    except COMMAND_ERRORS as e:
        ctx.error(e, f"build {input_path}")
        return EXIT_ERROR

    ctx.emit(f"Built {output_path}", STATS_COLUMNS, _stats_rows(lexicon))
    return EXIT_OK


def cmd_index(ctx: CliContext, word: str) -> int:
    """Print the lexicon index and digit vector of a word."""
    try:
        root = RootWord.from_text(word)
        index = encode(root)
        digits = digit_vector(root)
        line = ctx.templates.render_line(
            'index', index=index, digits=digits, word=root.text, length=len(root))
    except COMMAND_ERRORS as e:
        ctx.error(e, "index")
        return EXIT_ERROR

    ctx.emit(f"Index of {word}", ('index', 'digits', 'word'),
             [[index, ','.join(map(str, digits)), root.text]], lines=[line])
    return EXIT_OK


def cmd_word(ctx: CliContext, index_text: str) -> int:
    """Print the root stored at an index."""
    try:
        index = parse_index(index_text)
        if index is None:
            raise IndexOutOfRange(index_text)
        root = decode(index)
        length = word_length_of(index)
        line = ctx.templates.render_line(
            'word', word=root.text, length=length, index=index, digits=digit_vector(root))
    except COMMAND_ERRORS as e:
        ctx.error(e, "word")
        return EXIT_ERROR

    ctx.emit(f"Root at {index}", ('word', 'length'), [[root.text, length]], lines=[line])
    return EXIT_OK


def cmd_lookup(ctx: CliContext, word: str, lexicon_path: Optional[str]) -> int:
    """Print the entry for a word, or its computed index when absent."""
    try:
        path = ctx.resolve_lexicon(lexicon_path)
        with MappedLexicon(path) as lexicon:
            entry = lexicon.lookup(word)
        line = ctx.templates.render_line(
            'entry', index=entry.index, headword=entry.headword, definition=entry.definition)
    except NotFound as e:
        ctx.console.file.write(f"{e.index}\n")
        ctx.error(e, "lookup")
        return EXIT_NOT_FOUND
    except COMMAND_ERRORS as e:
        ctx.error(e, "lookup")
        return EXIT_ERROR

    ctx.emit(f"Lookup {word}", ('index', 'headword', 'definition'),
             [[entry.index, entry.headword, entry.definition]], lines=[line])
    return EXIT_OK


def cmd_permute(ctx: CliContext, letters: str) -> int:
    """Print every ordering of a letter set with its index."""
    try:
        words = enumerate_permutations(LetterSet.from_text(letters))
        rows = [[word.text, encode(word)] for word in words]
        lines = [ctx.templates.render_line('permutation', word=text, index=index)
                 for text, index in rows]
    except COMMAND_ERRORS as e:
        ctx.error(e, "permute")
        return EXIT_ERROR

    ctx.emit(f"Permutations of {letters}", ('word', 'index'), rows, lines=lines)
    return EXIT_OK


def cmd_stats(ctx: CliContext, lexicon_path: Optional[str]) -> int:
    """Print per-length entry counts of a lexicon file."""
    try:
        path = ctx.resolve_lexicon(lexicon_path)
        lexicon = load(path)
    except COMMAND_ERRORS as e:
        ctx.error(e, "stats")
        return EXIT_ERROR

    ctx.emit(f"Statistics for {path}", STATS_COLUMNS, _stats_rows(lexicon))
    return EXIT_OK


def cmd_verify(ctx: CliContext, full: bool = False) -> int:
    """
    Recompute the root counts two ways and check the total.

    Lengths 2 and 3 are always enumerated exhaustively; 4 and 5 only with
    full=True. Exit 0 iff every enumerated count agrees with the formula
    and the formula total equals the Al-Farahidy figure.
    """
    rows = []
    ok = True
    enumerated_total = 0

    for r in ROOT_LENGTHS:
        formula = combinatorics.count_roots(r)
        if r <= 3 or full:
            enumerated = combinatorics.count_roots_by_enumeration(r)
            enumerated_total += enumerated
            status = 'ok' if enumerated == formula else 'MISMATCH'
        else:
            enumerated = '-'
            status = 'skipped'
        ok = ok and status != 'MISMATCH'
        rows.append([r, formula, enumerated, combinatorics.hash_space_size(r), status])

    total = combinatorics.total_root_count()
    total_ok = total == combinatorics.FARAHIDY_TOTAL
    rows.append([
        'total', total, enumerated_total if full else '-',
        sum(row[3] for row in rows), 'ok' if total_ok else 'MISMATCH',
    ])

    ctx.emit("Root count check", ('length', 'formula', 'enumerated', 'space', 'status'), rows)
    if not (ok and total_ok):
        ctx.message(f"Verification failed: expected total {combinatorics.FARAHIDY_TOTAL}, got {total}")
        return EXIT_ERROR
    return EXIT_OK


def cmd_export(ctx: CliContext, lexicon_path: Optional[str]) -> int:
    """Write a lexicon file back out as TSV."""
    try:
        path = ctx.resolve_lexicon(lexicon_path)
        lexicon = load(path)
        lines = [ctx.templates.render_line('export', headword=e.headword, definition=e.definition,
                                           index=e.index)
                 for e in lexicon]
    except COMMAND_ERRORS as e:
        ctx.error(e, "export")
        return EXIT_ERROR

    ctx.emit(f"Export of {path}", ('headword', 'definition'),
             [[e.headword, e.definition] for e in lexicon], lines=lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument('--config', help="YAML configuration file")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress to stderr (-vv for debug)")
    common.add_argument('--table', action='store_true', help="render a rich table instead of lines")
    common.add_argument('--version', action='version', version=f"%(prog)s {__version__}")

    parser = CliArgumentParser(
        prog='farahidy',
        description="Al-Farahidy root lexicon: index, build and query",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=CliArgumentParser)

    p = subparsers.add_parser('build', parents=[common], help="build a lexicon file from a corpus")
    p.add_argument('--input', required=True, help="corpus file (.tsv, .yaml)")
    p.add_argument('--output', required=True, help="lexicon file to write")
    p.add_argument('--distinct-only', action='store_true', default=None,
                   help="drop roots with repeated letters")

    p = subparsers.add_parser('lookup', parents=[common], help="look up a word in a lexicon")
    p.add_argument('word')
    p.add_argument('--lexicon', help="lexicon file")

    p = subparsers.add_parser('index', parents=[common], help="print the index of a word")
    p.add_argument('word')

    p = subparsers.add_parser('word', parents=[common], help="print the root at an index")
    p.add_argument('index')

    p = subparsers.add_parser('permute', parents=[common], help="print all orderings of letters")
    p.add_argument('letters')

    p = subparsers.add_parser('stats', parents=[common], help="per-length counts of a lexicon")
    p.add_argument('--lexicon', help="lexicon file")

    p = subparsers.add_parser('verify', parents=[common], help="check the 12,305,412 root count")
    p.add_argument('--full', action='store_true', default=None,
                   help="also enumerate lengths 4 and 5")

    p = subparsers.add_parser('export', parents=[common], help="write a lexicon back out as TSV")
    p.add_argument('--lexicon', help="lexicon file")

    return parser


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    handler = RichHandler(console=Console(stderr=True), show_path=False)
    logging.basicConfig(level=level, format="%(message)s", handlers=[handler], force=True)


def _force_utf8(stream) -> None:
    try:
        stream.reconfigure(encoding='utf-8')
    except (AttributeError, ValueError, io.UnsupportedOperation):
        pass


def main(argv: Optional[Sequence[str]] = None) -> int:
    _force_utf8(sys.stdout)
    _force_utf8(sys.stderr)

    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    config_manager = ConfigManager()
    if args.config:
        try:
            config_manager.load_config(args.config)
        except ConfigError as e:
            CliContext().error(e, "config")
            return EXIT_ERROR

    ctx = CliContext(config_manager, style='table' if args.table else None)
    logger.debug("Running %s", args.command)

    if args.command == 'build':
        distinct_only = args.distinct_only
        if distinct_only is None:
            distinct_only = config_manager.get_distinct_only()
        return cmd_build(ctx, args.input, args.output, distinct_only)
    if args.command == 'lookup':
        return cmd_lookup(ctx, args.word, args.lexicon)
    if args.command == 'index':
        return cmd_index(ctx, args.word)
    if args.command == 'word':
        return cmd_word(ctx, args.index)
    if args.command == 'permute':
        return cmd_permute(ctx, args.letters)
    if args.command == 'stats':
        return cmd_stats(ctx, args.lexicon)
    if args.command == 'verify':
        full = args.full if args.full is not None else config_manager.get_verify_full()
        return cmd_verify(ctx, full)
    if args.command == 'export':
        return cmd_export(ctx, args.lexicon)

    parser.error(f"unknown command {args.command}")
    return EXIT_ERROR
