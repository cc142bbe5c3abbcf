"""
Corpus record sources for building a lexicon
"""

import logging
import os
import re
from abc import ABC, abstractmethod
from typing import Dict, Iterator, List, Optional

import yaml

from ..errors import RecordSourceError
from .lexicon import LexiconRecord

logger = logging.getLogger(__name__)

# Inverse of the output `tsv` filter
_TSV_ESCAPES = {'\\': '\\', 't': '\t', 'n': '\n', 'r': '\r'}
_TSV_ESCAPE_RE = re.compile(r"\\([\\tnr])")


def unescape_field(text: str) -> str:
    """Undo the backslash escapes written by the output `tsv` filter."""
    return _TSV_ESCAPE_RE.sub(lambda m: _TSV_ESCAPES[m.group(1)], text)


def _source_error(message: str, line: Optional[int] = None) -> RecordSourceError:
    error = RecordSourceError(message)
    error.line = line
    return error


class RecordSource(ABC):
    """Abstract base class for corpus files."""

    def __init__(self, path: str):
        self.path = path

    @abstractmethod
    def read_records(self) -> Iterator[LexiconRecord]:
        """Yield records with their source line numbers."""
        pass

    def __iter__(self) -> Iterator[LexiconRecord]:
        return self.read_records()

    def _open(self):
        if not os.path.exists(self.path):
            raise RecordSourceError(f"Corpus file not found: {self.path}")
        return open(self.path, 'r', encoding='utf-8-sig', newline='')


class TsvRecordSource(RecordSource):
    """
    `headword<TAB>definition` lines; `#` comments and blank lines skipped.

    Fields may carry the backslash escapes written by `export`.
    """

    def read_records(self) -> Iterator[LexiconRecord]:
        with self._open() as f:
            try:
                for line_no, line in enumerate(f, start=1):
                    line = line.rstrip('\r\n')
                    if not line.strip() or line.startswith('#'):
                        continue
                    if '\t' not in line:
                        raise _source_error("expected headword<TAB>definition", line_no)
                    headword, definition = line.split('\t', 1)
                    yield LexiconRecord(unescape_field(headword), unescape_field(definition), line_no)
            except UnicodeDecodeError as e:
                raise RecordSourceError(f"{self.path} is not valid UTF-8: {e.reason}") from None


class YamlRecordSource(RecordSource):
    """A YAML list of {headword, definition} mappings."""

    def read_records(self) -> Iterator[LexiconRecord]:
        with self._open() as f:
            try:
                text = f.read()
            except UnicodeDecodeError as e:
                raise RecordSourceError(f"{self.path} is not valid UTF-8: {e.reason}") from None

        try:
            data = yaml.safe_load(text)
            root = yaml.compose(text, Loader=yaml.SafeLoader)
        except yaml.YAMLError as e:
            raise RecordSourceError(f"Invalid YAML format: {e}") from None

        if data is None:
            return
        if not isinstance(data, list):
            raise RecordSourceError("YAML corpus must be a list of entries")

        for item, node in zip(data, root.value):
            line_no = node.start_mark.line + 1
            if not isinstance(item, dict) or 'headword' not in item:
                raise _source_error("entry must be a mapping with a 'headword' key", line_no)
            definition = item.get('definition')
            yield LexiconRecord(
                str(item['headword']),
                '' if definition is None else str(definition),
                line_no,
            )


class RecordSourceManager:
    """Factory choosing a record source by file extension."""

    _source_classes: Dict[str, type] = {}

    @classmethod
    def register_source_class(cls, extension: str, source_class: type):
        cls._source_classes[extension.lower().lstrip('.')] = source_class

    @classmethod
    def create_source(cls, path: str) -> RecordSource:
        extension = os.path.splitext(path)[1].lower().lstrip('.')
        if extension not in cls._source_classes:
            supported = ', '.join(sorted(cls.get_supported_formats()))
            raise RecordSourceError(f"Unsupported corpus format: {path} (expected {supported})")
        return cls._source_classes[extension](path)

    @classmethod
    def read_records(cls, path: str) -> List[LexiconRecord]:
        records = list(cls.create_source(path))
        logger.debug("Read %d records from %s", len(records), path)
        return records

    @classmethod
    def get_supported_formats(cls) -> List[str]:
        return list(cls._source_classes.keys())
