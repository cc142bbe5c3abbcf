"""
Persistent lexicon: build, lookup, statistics and the binary file format
"""

from .lexicon import (
    Lexicon, LexiconEntry, LexiconRecord, LexiconStats,
    build, distinct_letters_only, lookup, stats,
)
from .binary import MappedLexicon, deserialize, dumps, load, loads, save, serialize
from .sources import RecordSource, RecordSourceManager, TsvRecordSource, YamlRecordSource

# Register corpus formats
RecordSourceManager.register_source_class('tsv', TsvRecordSource)
RecordSourceManager.register_source_class('yaml', YamlRecordSource)
RecordSourceManager.register_source_class('yml', YamlRecordSource)

__all__ = [
    'Lexicon',
    'LexiconEntry',
    'LexiconRecord',
    'LexiconStats',
    'MappedLexicon',
    'RecordSource',
    'RecordSourceManager',
    'TsvRecordSource',
    'YamlRecordSource',
    'build',
    'deserialize',
    'distinct_letters_only',
    'dumps',
    'load',
    'loads',
    'lookup',
    'save',
    'serialize',
    'stats',
]
