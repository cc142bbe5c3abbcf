import pytest

from farahidy import __version__, combinatorics
from farahidy.cli import EXIT_ERROR, EXIT_NOT_FOUND, EXIT_OK, main
from farahidy.store import load

from .conftest import SAMPLE_ROOTS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def lexicon_file(tmp_path, sample_roots_tsv, capsys):
    path = tmp_path / 'sample_roots.frhd'
    assert main(['build', '--input', sample_roots_tsv, '--output', str(path)]) == EXIT_OK
    capsys.readouterr()
    return str(path)


def test_index(capsys):
    code, out, _ = run(capsys, 'index', 'عَمْر')
    assert code == EXIT_OK
    assert out == '16353\t1,25,20,0,0\n'


def test_index_rejects_bare_hamza(capsys):
    code, out, err = run(capsys, 'index', 'ءب')
    assert code == EXIT_ERROR
    assert out == ''
    assert 'BareHamza' in err


@pytest.mark.parametrize("index,line", [
    ('1', 'عع\t2\n'), ('16353', 'عمر\t3\n'), ('17847760', 'ااااا\t5\n'),
])
def test_word(capsys, index, line):
    code, out, _ = run(capsys, 'word', index)
    assert code == EXIT_OK
    assert out == line


@pytest.mark.parametrize("index", ['0', '17847761', 'abc', '1.5'])
def test_word_out_of_range(capsys, index):
    code, out, err = run(capsys, 'word', index)
    assert code == EXIT_ERROR
    assert out == ''
    assert 'IndexOutOfRange' in err


def test_permute(capsys):
    code, out, _ = run(capsys, 'permute', 'عمر')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[1] == 'عمر\t16353'
    assert len({line.split('\t')[1] for line in lines}) == 6


def test_permute_rejects_repeated_letters(capsys):
    code, _, err = run(capsys, 'permute', 'مدد')
    assert code == EXIT_ERROR
    assert 'InvalidLetterSet' in err


def test_build_prints_stats(capsys, tmp_path, sample_roots_yaml):
    output = tmp_path / 'nested' / 'lex.frhd'
    code, out, _ = run(capsys, 'build', '--input', sample_roots_yaml, '--output', str(output))
    assert code == EXIT_OK
    assert output.exists()
    assert out.splitlines()[-1] == 'total\t6\t6'


def test_build_and_lookup_every_word(capsys, lexicon_file):
    for headword, definition in SAMPLE_ROOTS:
        code, out, _ = run(capsys, 'lookup', headword, '--lexicon', lexicon_file)
        assert code == EXIT_OK
        index, stored, text = out.rstrip('\n').split('\t')
        assert stored == headword
        assert text == definition


def test_lookup_not_found(capsys, lexicon_file):
    code, out, err = run(capsys, 'lookup', 'كتب', '--lexicon', lexicon_file)
    assert code == EXIT_NOT_FOUND
    assert out == '19215\n'
    assert 'NotFound' in err


def test_lookup_invalid_word(capsys, lexicon_file):
    code, _, _ = run(capsys, 'lookup', 'ع', '--lexicon', lexicon_file)
    assert code == EXIT_ERROR


def test_lookup_without_lexicon(capsys):
    code, _, err = run(capsys, 'lookup', 'عم')
    assert code == EXIT_ERROR
    assert 'ConfigError' in err


def test_lookup_bad_file(capsys, tmp_path):
    path = tmp_path / 'bad.frhd'
    path.write_bytes(b'NOPE' + bytes(9))
    code, _, err = run(capsys, 'lookup', 'عم', '--lexicon', str(path))
    assert code == EXIT_ERROR
    assert 'BadMagic' in err


def test_lookup_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, 'lookup', 'عم', '--lexicon', str(tmp_path / 'absent.frhd'))
    assert code == EXIT_ERROR


def test_lexicon_from_config(capsys, tmp_path, lexicon_file):
    config = tmp_path / 'farahidy.yaml'
    config.write_text('lexicon: sample_roots.frhd\n', encoding='utf-8')
    code, out, _ = run(capsys, 'lookup', 'جواد', '--config', str(config))
    assert code == EXIT_OK
    assert out == '373892\tجواد\tgenerous; a fine horse\n'


def test_template_from_config(capsys, tmp_path):
    config = tmp_path / 'farahidy.yaml'
    config.write_text('display:\n  templates:\n    index: "{{ word }}={{ index }}"\n',
                      encoding='utf-8')
    code, out, _ = run(capsys, 'index', 'قد', '--config', str(config))
    assert code == EXIT_OK
    assert out == 'قد=426\n'


def test_bad_config(capsys, tmp_path):
    config = tmp_path / 'farahidy.yaml'
    config.write_text('display:\n  style: fancy\n', encoding='utf-8')
    code, _, err = run(capsys, 'verify', '--config', str(config))
    assert code == EXIT_ERROR
    assert 'ConfigError' in err


def test_build_duplicate_reports_line(capsys, tmp_path):
    corpus = tmp_path / 'dup.tsv'
    corpus.write_text('عمر\tone\nعَمَر\ttwo\n', encoding='utf-8')
    code, _, err = run(capsys, 'build', '--input', str(corpus), '--output', str(tmp_path / 'x.frhd'))
    assert code == EXIT_ERROR
    assert 'DuplicateIndex' in err
    assert 'line 2' in err
    assert not (tmp_path / 'x.frhd').exists()


def test_build_distinct_only(capsys, tmp_path):
    corpus = tmp_path / 'corpus.tsv'
    corpus.write_text('عع\trepeat\nعم\tuncle\n', encoding='utf-8')
    output = tmp_path / 'lex.frhd'
    code, out, _ = run(capsys, 'build', '--input', str(corpus), '--output', str(output),
                       '--distinct-only')
    assert code == EXIT_OK
    assert out.splitlines()[-1] == 'total\t1\t1'


def test_distinct_only_from_config(capsys, tmp_path):
    corpus = tmp_path / 'corpus.tsv'
    corpus.write_text('عع\trepeat\nعم\tuncle\n', encoding='utf-8')
    config = tmp_path / 'farahidy.yaml'
    config.write_text('build:\n  distinct_only: true\n', encoding='utf-8')
    code, out, _ = run(capsys, 'build', '--input', str(corpus), '--output',
                       str(tmp_path / 'lex.frhd'), '--config', str(config))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == 'total\t1\t1'


def test_build_bad_corpus(capsys, tmp_path):
    corpus = tmp_path / 'corpus.tsv'
    corpus.write_text('ءب\tx\n', encoding='utf-8')
    code, _, err = run(capsys, 'build', '--input', str(corpus), '--output', str(tmp_path / 'x.frhd'))
    assert code == EXIT_ERROR
    assert 'line 1' in err


def test_stats(capsys, lexicon_file):
    code, out, _ = run(capsys, 'stats', '--lexicon', lexicon_file)
    assert code == EXIT_OK
    assert out.splitlines() == ['2\t2\t2', '3\t1\t1', '4\t1\t1', '5\t2\t2', 'total\t6\t6']


def test_stats_table(capsys, lexicon_file):
    code, out, _ = run(capsys, 'stats', '--lexicon', lexicon_file, '--table')
    assert code == EXIT_OK
    assert 'Statistics for' in out
    assert 'distinct' in out


def test_export_round_trip(capsys, tmp_path, lexicon_file):
    code, out, _ = run(capsys, 'export', '--lexicon', lexicon_file)
    assert code == EXIT_OK
    exported = tmp_path / 'exported.tsv'
    exported.write_text(out, encoding='utf-8')
    rebuilt = tmp_path / 'rebuilt.frhd'
    assert main(['build', '--input', str(exported), '--output', str(rebuilt)]) == EXIT_OK
    assert rebuilt.read_bytes() == open(lexicon_file, 'rb').read()


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify')
    assert code == EXIT_OK
    assert out.splitlines() == [
        '2\t756\t756\t784\tok',
        '3\t19656\t19656\t21952\tok',
        '4\t491400\t-\t614656\tskipped',
        '5\t11793600\t-\t17210368\tskipped',
        'total\t12305412\t-\t17847760\tok',
    ]


def test_verify_detects_wrong_total(capsys, monkeypatch):
    monkeypatch.setattr(combinatorics, 'FARAHIDY_TOTAL', 12305413)
    code, out, err = run(capsys, 'verify')
    assert code == EXIT_ERROR
    assert out.splitlines()[-1].endswith('MISMATCH')
    assert 'Verification failed' in err


def test_verify_detects_formula_mismatch(capsys, monkeypatch):
    formula = combinatorics.count_roots
    monkeypatch.setattr(combinatorics, 'count_roots', lambda r: formula(r) + (r == 2))
    code, out, _ = run(capsys, 'verify')
    assert code == EXIT_ERROR
    assert out.splitlines()[0] == '2\t757\t756\t784\tMISMATCH'


@pytest.mark.slow
def test_verify_full(capsys):
    code, out, _ = run(capsys, 'verify', '--full')
    assert code == EXIT_OK
    assert out.splitlines()[-1] == 'total\t12305412\t12305412\t17847760\tok'


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['--version'])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_help(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['--help'])
    assert excinfo.value.code == 0
    assert 'lookup' in capsys.readouterr().out


@pytest.mark.parametrize("argv", [[], ['index'], ['frobnicate'], ['build', '--input', 'x.tsv']])
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == EXIT_ERROR


def test_export_round_trip_with_escaped_fields(capsys, tmp_path):
    corpus = tmp_path / 'corpus.tsv'
    corpus.write_text(
        'عم\tpath C:\\dir\n'
        'قد\tcol1\tcol2\n'
        'عمر\tfirst\\nsecond\n',
        encoding='utf-8',
    )
    original = tmp_path / 'original.frhd'
    assert main(['build', '--input', str(corpus), '--output', str(original)]) == EXIT_OK
    capsys.readouterr()

    lexicon = load(str(original))
    assert lexicon.get(673).definition == 'path C:\\dir'
    assert lexicon.get(426).definition == 'col1\tcol2'
    assert lexicon.get(16353).definition == 'first\nsecond'

    code, out, _ = run(capsys, 'export', '--lexicon', str(original))
    assert code == EXIT_OK
    assert len(out.splitlines()) == 3
    exported = tmp_path / 'exported.tsv'
    exported.write_text(out, encoding='utf-8')

    rebuilt = tmp_path / 'rebuilt.frhd'
    assert main(['build', '--input', str(exported), '--output', str(rebuilt)]) == EXIT_OK
    assert load(str(rebuilt)) == lexicon
    assert rebuilt.read_bytes() == original.read_bytes()


def test_build_empty_corpus(capsys, tmp_path):
    corpus = tmp_path / 'empty.tsv'
    corpus.write_text('', encoding='utf-8')
    output = tmp_path / 'empty.frhd'
    code, out, _ = run(capsys, 'build', '--input', str(corpus), '--output', str(output))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == 'total\t0\t0'
    assert len(load(str(output))) == 0


def test_permute_five_letters(capsys):
    code, out, _ = run(capsys, 'permute', 'سفرجل')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 120
    assert 'سفرجل\t13099700' in lines
    assert len({line.split('\t')[1] for line in lines}) == 120


def test_word_first_five_letter_root(capsys):
    code, out, _ = run(capsys, 'word', '637393')
    assert code == EXIT_OK
    assert out == 'ععععع\t5\n'
