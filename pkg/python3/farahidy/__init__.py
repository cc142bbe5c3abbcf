"""
farahidy - Al-Farahidy root lexicon indexing
Version: 1.0.0
"""

__version__ = "1.0.0"

# Import main modules for easy access
from .alphabet import letter_of, normalize_text, weight_of
from .combinatorics import LetterSet, count_roots, enumerate_permutations, hash_space_size, total_root_count
from .indexer import RootWord, decode, encode, encode_text, index_range, word_length_of
from .store import Lexicon, LexiconEntry, build, deserialize, lookup, serialize, stats

__all__ = [
    'LetterSet',
    'Lexicon',
    'LexiconEntry',
    'RootWord',
    'build',
    'count_roots',
    'decode',
    'deserialize',
    'encode',
    'encode_text',
    'enumerate_permutations',
    'hash_space_size',
    'index_range',
    'letter_of',
    'lookup',
    'normalize_text',
    'serialize',
    'stats',
    'total_root_count',
    'weight_of',
    'word_length_of',
]
