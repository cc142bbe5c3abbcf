import os

import pytest

from farahidy.store import LexiconRecord

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')

SAMPLE_ROOTS = [
    ('عم', 'uncle'),
    ('قد', 'to cut lengthwise'),
    ('عمر', 'a proper name'),
    ('جواد', 'generous; a fine horse'),
    ('سفرجل', 'quince'),
    ('أقشعر', 'to shudder'),
]


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture
def sample_roots_records():
    return [LexiconRecord(h, d) for h, d in SAMPLE_ROOTS]


@pytest.fixture
def sample_roots_tsv():
    return fixture_path('sample_roots.tsv')


@pytest.fixture
def sample_roots_yaml():
    return fixture_path('sample_roots.yaml')
