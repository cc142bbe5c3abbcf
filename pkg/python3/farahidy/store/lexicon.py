"""
In-memory lexicon keyed by root index
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from ..errors import DuplicateIndex, FarahidyError, NotFound
from ..indexer import ROOT_LENGTHS, RootWord, decode, encode, encode_text, has_repeated_letters, word_length_of

logger = logging.getLogger(__name__)


class LexiconRecord(NamedTuple):
    """One corpus record before indexing."""
    headword: str
    definition: str
    line: Optional[int] = None


@dataclass(frozen=True)
class LexiconEntry:
    index: int
    headword: str
    definition: str = ''

    @classmethod
    def from_record(cls, headword: str, definition: str = '') -> 'LexiconEntry':
        return cls(encode_text(headword), headword, definition)

    @property
    def root(self) -> RootWord:
        return decode(self.index)

    @property
    def length(self) -> int:
        return word_length_of(self.index)


@dataclass(frozen=True)
class LexiconStats:
    by_length: Dict[int, int]
    distinct_by_length: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_length.values())


RecordFilter = Callable[[LexiconEntry], bool]


class Lexicon:
    """Entries with pairwise-distinct indices. Immutable once built."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self._entries: Dict[int, LexiconEntry] = {}
        for entry in entries:
            existing = self._entries.get(entry.index)
            if existing is not None:
                raise DuplicateIndex(entry.index, existing.headword, entry.headword)
            self._entries[entry.index] = entry
        self._sorted: Optional[List[LexiconEntry]] = None

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, index: int) -> bool:
        return index in self._entries

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} entries)"

    def entries(self) -> List[LexiconEntry]:
        """Entries in ascending index order."""
        if self._sorted is None:
            self._sorted = [self._entries[i] for i in sorted(self._entries)]
        return self._sorted

    def get(self, index: int) -> Optional[LexiconEntry]:
        return self._entries.get(index)

    def lookup(self, word: Union[RootWord, str]) -> LexiconEntry:
        return lookup(self, word)

    def stats(self) -> LexiconStats:
        return stats(self)


def _coerce_record(position: int, record) -> LexiconRecord:
    if isinstance(record, LexiconRecord):
        if record.line is None:
            return record._replace(line=position)
        return record
    headword, definition = record
    return LexiconRecord(headword, definition, position)


def build(records: Iterable[Union[LexiconRecord, Tuple[str, str]]],
          record_filter: Optional[RecordFilter] = None) -> Lexicon:
    """
    Index (headword, definition) records into a Lexicon.

    Records without a line number are numbered from 1 in input order.
    record_filter, when given, keeps only entries for which it returns True.

    Raises:
        NormalizationError / InvalidRoot: headword is not a root (line set)
        DuplicateIndex: two kept records share an index (line set)
    """
    entries: Dict[int, LexiconEntry] = {}
    dropped = 0

    for position, record in enumerate(records, start=1):
        record = _coerce_record(position, record)
        try:
            entry = LexiconEntry.from_record(record.headword, record.definition)
        except FarahidyError as e:
            e.line = record.line
            raise

        if record_filter is not None and not record_filter(entry):
            dropped += 1
            continue

        existing = entries.get(entry.index)
        if existing is not None:
            error = DuplicateIndex(entry.index, existing.headword, entry.headword)
            error.line = record.line
            raise error
        entries[entry.index] = entry

    if dropped:
        logger.info("Filtered out %d records", dropped)
    logger.info("Built lexicon with %d entries", len(entries))
    return Lexicon(entries.values())


def distinct_letters_only(entry: LexiconEntry) -> bool:
    """Filter hook dropping roots with a repeated letter (e.g. عع)."""
    return not has_repeated_letters(entry.root)


def lookup(lexicon: Lexicon, word: Union[RootWord, str]) -> LexiconEntry:
    """
    Direct access by index.

    A str is treated as a raw headword and normalized first.

    Raises:
        NormalizationError: word is not a valid root
        NotFound: valid root with no entry
    """
    index = encode_text(word) if isinstance(word, str) else encode(word)
    entry = lexicon.get(index)
    if entry is None:
        raise NotFound(index)
    return entry


def stats(lexicon: Lexicon) -> LexiconStats:
    by_length = {r: 0 for r in ROOT_LENGTHS}
    distinct = {r: 0 for r in ROOT_LENGTHS}

    for entry in lexicon.entries():
        root = entry.root
        by_length[len(root)] += 1
        if not has_repeated_letters(root):
            distinct[len(root)] += 1

    return LexiconStats(by_length, distinct)
