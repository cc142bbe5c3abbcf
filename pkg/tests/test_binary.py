import io

import pytest

from farahidy.combinatorics import FARAHIDY_TOTAL, count_table
from farahidy.errors import (
    BadMagic, BadVersion, CorruptRecord, IndexOutOfRange, LexiconFormatError, NotFound, TruncatedFile,
)
from farahidy.indexer import ROOT_LENGTHS, decode, has_repeated_letters, index_range
from farahidy.store import (
    Lexicon, LexiconEntry, MappedLexicon, build, deserialize, dumps, load, loads, save, serialize,
    stats,
)
from farahidy.store.binary import HEADER, RECORD

GOLDEN = bytes.fromhex(
    '46524844' '01' '0300000000000000'
    'AA01000000000000' '0000000000000000' '04000000' '01000000'
    'A102000000000000' '0500000000000000' '04000000' '01000000'
    'E13F000000000000' '0A00000000000000' '06000000' '01000000'
    'D982D8AF' '62'
    'D8B9D985' '61'
    'D8B9D985D8B1' '63'
)


@pytest.fixture
def small_lexicon():
    return build([('عم', 'a'), ('قد', 'b'), ('عمر', 'c')])


def test_golden_bytes(small_lexicon):
    assert HEADER.size == 13
    assert RECORD.size == 24
    assert dumps(small_lexicon) == GOLDEN
    assert len(GOLDEN) == 102


def test_serialize_reports_bytes_written(small_lexicon):
    sink = io.BytesIO()
    assert serialize(small_lexicon, sink) == len(GOLDEN)
    assert deserialize(io.BytesIO(sink.getvalue())) == small_lexicon


def test_loads_golden(small_lexicon):
    lexicon = loads(GOLDEN)
    assert lexicon == small_lexicon
    assert lexicon.get(426).definition == 'b'


def test_empty_lexicon_file():
    data = dumps(Lexicon())
    assert data == b'FRHD\x01' + bytes(8)
    assert len(loads(data)) == 0


def test_bad_magic():
    with pytest.raises(BadMagic):
        loads(b'XXXX' + GOLDEN[4:])


def test_bad_version():
    with pytest.raises(BadVersion) as excinfo:
        loads(GOLDEN[:4] + b'\x02' + GOLDEN[5:])
    assert excinfo.value.version == 2


@pytest.mark.parametrize("size", [0, 3, 12, 13, 40, 84, 85, 99, 101])
def test_truncated(size):
    with pytest.raises(TruncatedFile):
        loads(GOLDEN[:size])


def test_trailing_bytes():
    with pytest.raises(CorruptRecord):
        loads(GOLDEN + b'\x00')


def _patch_record(data: bytes, k: int, **fields) -> bytes:
    offset = HEADER.size + k * RECORD.size
    values = dict(zip(('index', 'offset', 'hwlen', 'deflen'), RECORD.unpack_from(data, offset)))
    values.update(fields)
    patched = bytearray(data)
    RECORD.pack_into(patched, offset, values['index'], values['offset'],
                     values['hwlen'], values['deflen'])
    return bytes(patched)


def test_index_not_matching_headword():
    with pytest.raises(CorruptRecord) as excinfo:
        loads(_patch_record(GOLDEN, 0, index=427))
    assert excinfo.value.offset == HEADER.size


def test_indices_not_ascending():
    with pytest.raises(CorruptRecord):
        loads(_patch_record(GOLDEN, 1, index=426))


def test_index_out_of_range():
    with pytest.raises(CorruptRecord):
        loads(_patch_record(GOLDEN, 2, index=17847761))


def test_overlapping_blob_offsets():
    with pytest.raises(CorruptRecord):
        loads(_patch_record(GOLDEN, 1, offset=4))


def test_invalid_utf8():
    data = bytearray(GOLDEN)
    data[HEADER.size + 3 * RECORD.size] = 0xFF
    with pytest.raises(CorruptRecord):
        loads(bytes(data))


def test_format_errors_share_a_base():
    for error in (BadMagic, BadVersion, CorruptRecord, TruncatedFile):
        assert issubclass(error, LexiconFormatError)


def test_save_and_load(tmp_path, small_lexicon):
    path = tmp_path / 'small.frhd'
    assert save(small_lexicon, str(path)) == len(GOLDEN)
    assert path.read_bytes() == GOLDEN
    assert load(str(path)) == small_lexicon


def test_mapped_lexicon(tmp_path, sample_roots_records):
    lexicon = build(sample_roots_records)
    path = tmp_path / 'sample_roots.frhd'
    save(lexicon, str(path))

    with MappedLexicon(str(path)) as mapped:
        assert len(mapped) == 6
        assert list(mapped) == lexicon.entries()
        assert mapped.lookup('سفرجل').definition == 'quince'
        assert mapped.get(13099700).headword == 'سفرجل'
        assert mapped.get(1) is None
        assert mapped.get(17847760) is None
        with pytest.raises(NotFound) as excinfo:
            mapped.lookup('كتب')
        assert excinfo.value.index == 19215
        with pytest.raises(IndexOutOfRange):
            mapped.get(0)


def test_mapped_lexicon_must_be_open(tmp_path, small_lexicon):
    path = tmp_path / 'small.frhd'
    save(small_lexicon, str(path))
    mapped = MappedLexicon(str(path))
    with pytest.raises(ValueError):
        mapped.get(426)


def test_mapped_lexicon_rejects_bad_files(tmp_path):
    empty = tmp_path / 'empty.frhd'
    empty.write_bytes(b'')
    with pytest.raises(TruncatedFile):
        MappedLexicon(str(empty)).open()

    wrong = tmp_path / 'wrong.frhd'
    wrong.write_bytes(b'NOPE' + GOLDEN[4:])
    with pytest.raises(BadMagic):
        MappedLexicon(str(wrong)).open()


def test_mapped_lexicon_over_empty_lexicon(tmp_path):
    path = tmp_path / 'none.frhd'
    save(Lexicon(), str(path))
    with MappedLexicon(str(path)) as mapped:
        assert len(mapped) == 0
        assert mapped.get(673) is None


@pytest.mark.slow
def test_every_distinct_letter_root(tmp_path):
    entries = [
        LexiconEntry(i, decode(i).text)
        for r in ROOT_LENGTHS
        for i in range(index_range(r)[0], index_range(r)[1] + 1)
        if not has_repeated_letters(decode(i))
    ]
    lexicon = Lexicon(entries)
    assert len(lexicon) == FARAHIDY_TOTAL
    summary = stats(lexicon)
    assert summary.by_length == count_table()
    assert summary.distinct_by_length == count_table()

    path = tmp_path / 'all.frhd'
    save(lexicon, str(path))
    with MappedLexicon(str(path)) as mapped:
        assert len(mapped) == FARAHIDY_TOTAL
        assert mapped.lookup('أقشعر').index == 12322296
    assert len(load(str(path))) == FARAHIDY_TOTAL
