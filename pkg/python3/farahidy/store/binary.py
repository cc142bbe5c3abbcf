"""
Binary lexicon file format.

Layout (all integers little-endian, text UTF-8 without BOM):

    0   4s  magic b'FRHD'
    4   B   format version (1)
    5   Q   record count n
    13  n fixed-width records, ascending by index:
            Q index, Q blob offset, I headword bytes, I definition bytes
    ..  blob section: headword then definition bytes, record by record
"""

import io
import logging
import mmap
import os
import struct
from bisect import bisect_left
from typing import BinaryIO, Iterator, List, Optional, Tuple, Union

from ..errors import (
    BadMagic, BadVersion, CorruptRecord, FarahidyError, IndexOutOfRange, NotFound, TruncatedFile,
)
from ..indexer import MAX_INDEX, MIN_INDEX, RootWord, encode, encode_text
from .lexicon import Lexicon, LexiconEntry

logger = logging.getLogger(__name__)

MAGIC = b'FRHD'
FORMAT_VERSION = 1

HEADER = struct.Struct('<4sBQ')
RECORD = struct.Struct('<QQII')

Buffer = Union[bytes, bytearray, memoryview, mmap.mmap]


def serialize(lexicon: Lexicon, sink: BinaryIO) -> int:
    """Write lexicon to a binary stream; return the number of bytes written."""
    records = bytearray()
    blobs: List[bytes] = []
    offset = 0

    for entry in lexicon.entries():
        headword = entry.headword.encode('utf-8')
        definition = entry.definition.encode('utf-8')
        records += RECORD.pack(entry.index, offset, len(headword), len(definition))
        blobs.append(headword)
        blobs.append(definition)
        offset += len(headword) + len(definition)

    written = sink.write(HEADER.pack(MAGIC, FORMAT_VERSION, len(lexicon)))
    written += sink.write(records)
    for blob in blobs:
        written += sink.write(blob)

    logger.debug("Serialized %d entries, %d bytes", len(lexicon), written)
    return written


def dumps(lexicon: Lexicon) -> bytes:
    sink = io.BytesIO()
    serialize(lexicon, sink)
    return sink.getvalue()


def _read_header(buffer: Buffer) -> int:
    """Validate the header and record table bounds; return the record count."""
    size = len(buffer)
    if size >= len(MAGIC) and bytes(buffer[:len(MAGIC)]) != MAGIC:
        raise BadMagic(bytes(buffer[:len(MAGIC)]))
    if size < HEADER.size:
        raise TruncatedFile(HEADER.size, size)

    _, version, count = HEADER.unpack_from(buffer, 0)
    if version != FORMAT_VERSION:
        raise BadVersion(version)

    table_end = HEADER.size + count * RECORD.size
    if size < table_end:
        raise TruncatedFile(table_end, size)
    return count


def _decode_entry(buffer: Buffer, record_offset: int, blob_start: int,
                  index: int, blob_offset: int, headword_len: int, definition_len: int) -> LexiconEntry:
    start = blob_start + blob_offset
    middle = start + headword_len
    end = middle + definition_len
    if end > len(buffer):
        raise TruncatedFile(end, len(buffer))

    try:
        headword = bytes(buffer[start:middle]).decode('utf-8')
        definition = bytes(buffer[middle:end]).decode('utf-8')
    except UnicodeDecodeError as e:
        raise CorruptRecord(record_offset, f"invalid UTF-8 in blob: {e.reason}") from None

    try:
        expected = encode_text(headword)
    except FarahidyError as e:
        raise CorruptRecord(record_offset, f"headword is not a root: {e}") from None
    if expected != index:
        raise CorruptRecord(record_offset, f"index {index} does not match headword {headword!r}")

    return LexiconEntry(index, headword, definition)


def loads(buffer: Buffer) -> Lexicon:
    """Parse a complete lexicon file image."""
    count = _read_header(buffer)
    blob_start = HEADER.size + count * RECORD.size
    table = memoryview(buffer)[HEADER.size:blob_start]

    # First pass: structure only, so size errors surface before content errors
    rows: List[Tuple[int, int, int, int]] = []
    previous = 0
    cursor = 0
    for k, row in enumerate(RECORD.iter_unpack(table)):
        index, blob_offset, headword_len, definition_len = row
        record_offset = HEADER.size + k * RECORD.size
        if not MIN_INDEX <= index <= MAX_INDEX:
            raise CorruptRecord(record_offset, f"index {index} out of range")
        if index <= previous:
            raise CorruptRecord(record_offset, f"index {index} not ascending after {previous}")
        if blob_offset != cursor:
            raise CorruptRecord(record_offset, f"blob offset {blob_offset}, expected {cursor}")
        previous = index
        cursor += headword_len + definition_len
        rows.append(row)
    table.release()

    expected_size = blob_start + cursor
    if len(buffer) < expected_size:
        raise TruncatedFile(expected_size, len(buffer))
    if len(buffer) > expected_size:
        raise CorruptRecord(expected_size, f"{len(buffer) - expected_size} trailing bytes")

    entries = [
        _decode_entry(buffer, HEADER.size + k * RECORD.size, blob_start, *row)
        for k, row in enumerate(rows)
    ]
    return Lexicon(entries)


def deserialize(source: BinaryIO) -> Lexicon:
    """Read a lexicon from a binary stream."""
    return loads(source.read())


def save(lexicon: Lexicon, path: str) -> int:
    with open(path, 'wb') as f:
        written = serialize(lexicon, f)
    logger.info("Wrote %d entries to %s", len(lexicon), path)
    return written


def load(path: str) -> Lexicon:
    with open(path, 'rb') as f:
        lexicon = deserialize(f)
    logger.debug("Loaded %d entries from %s", len(lexicon), path)
    return lexicon


class _IndexColumn:
    """Sequence view over the index field of the record table, for bisect."""

    def __init__(self, buffer: Buffer, count: int):
        self._buffer = buffer
        self._count = count

    def __len__(self) -> int:
        return self._count

    def __getitem__(self, k: int) -> int:
        return RECORD.unpack_from(self._buffer, HEADER.size + k * RECORD.size)[0]


class MappedLexicon:
    """
    Read-only, memory-mapped lexicon file.

    Only the header is validated on open; get() locates a record by binary
    search over the fixed-width table and decodes that record's blob alone.
    """

    def __init__(self, path: str):
        self.path = path
        self._file = None
        self._map: Optional[mmap.mmap] = None
        self._count = 0
        self._blob_start = 0

    def open(self) -> 'MappedLexicon':
        if self._map is not None:
            return self

        size = os.path.getsize(self.path)
        if size == 0:
            raise TruncatedFile(HEADER.size, 0)

        self._file = open(self.path, 'rb')
        try:
            self._map = mmap.mmap(self._file.fileno(), 0, access=mmap.ACCESS_READ)
            self._count = _read_header(self._map)
        except Exception:
            self.close()
            raise
        self._blob_start = HEADER.size + self._count * RECORD.size
        logger.debug("Mapped %s with %d records", self.path, self._count)
        return self

    def close(self):
        if self._map is not None:
            self._map.close()
            self._map = None
        if self._file is not None:
            self._file.close()
            self._file = None

    def __enter__(self):
        return self.open()

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def __len__(self) -> int:
        return self._count

    def _entry_at(self, k: int) -> LexiconEntry:
        record_offset = HEADER.size + k * RECORD.size
        row = RECORD.unpack_from(self._map, record_offset)
        return _decode_entry(self._map, record_offset, self._blob_start, *row)

    def get(self, index: int) -> Optional[LexiconEntry]:
        if self._map is None:
            raise ValueError("Lexicon file is not open")
        if not MIN_INDEX <= index <= MAX_INDEX:
            raise IndexOutOfRange(index)

        column = _IndexColumn(self._map, self._count)
        k = bisect_left(column, index)
        if k == self._count or column[k] != index:
            return None
        return self._entry_at(k)

    def lookup(self, word: Union[RootWord, str]) -> LexiconEntry:
        index = encode_text(word) if isinstance(word, str) else encode(word)
        entry = self.get(index)
        if entry is None:
            raise NotFound(index)
        return entry

    def __iter__(self) -> Iterator[LexiconEntry]:
        for k in range(self._count):
            yield self._entry_at(k)
