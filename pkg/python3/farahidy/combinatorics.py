"""
Root counting and permutation (taqalib) enumeration
"""

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterable, List, Tuple

from .alphabet import ALPHABET_SIZE, is_root_letter, normalize_text, weight_of
from .errors import InvalidLetterSet
from .indexer import BASE, MAX_LENGTH, MIN_LENGTH, ROOT_LENGTHS, RootWord, check_syllable

# Root count reported for Al-Farahidy's lexicon, used and unused roots together
FARAHIDY_TOTAL = 12305412


def count_roots(r: int) -> int:
    """Number of length-r roots with pairwise-distinct letters: 28!/(28-r)!."""
    check_syllable(r)
    # Falling factorial; never materializes 28!
    return math.perm(ALPHABET_SIZE, r)


def total_root_count() -> int:
    return sum(count_roots(r) for r in ROOT_LENGTHS)


def hash_space_size(r: int) -> int:
    """Number of length-r roots when letters may repeat: 28^r."""
    check_syllable(r)
    return BASE ** r


def repeated_letter_count(r: int) -> int:
    """Length-r roots with at least one repeated letter."""
    return hash_space_size(r) - count_roots(r)


def count_roots_by_enumeration(r: int) -> int:
    """
    Count distinct-letter roots of length r by walking every weight tuple.

    Independent of count_roots; r=5 visits 17,210,368 tuples.
    """
    check_syllable(r)
    weights = range(1, ALPHABET_SIZE + 1)
    return sum(1 for digits in product(weights, repeat=r) if len(set(digits)) == r)


def count_table() -> Dict[int, int]:
    return {r: count_roots(r) for r in ROOT_LENGTHS}


@dataclass(frozen=True)
class LetterSet:
    """2-5 pairwise-distinct root letters, kept in ascending weight order."""

    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        if not MIN_LENGTH <= len(letters) <= MAX_LENGTH:
            raise InvalidLetterSet(
                f"Letter set must have {MIN_LENGTH}-{MAX_LENGTH} letters, got {len(letters)}"
            )
        for letter in letters:
            if not isinstance(letter, str) or not is_root_letter(letter):
                raise InvalidLetterSet(f"{letter!r} is not a root letter")
        if len(set(letters)) != len(letters):
            raise InvalidLetterSet(f"Letters must be distinct: {''.join(letters)}")
        object.__setattr__(self, 'letters', tuple(sorted(letters, key=weight_of)))

    @classmethod
    def from_text(cls, raw: str) -> 'LetterSet':
        return cls(tuple(normalize_text(raw)))

    @classmethod
    def of(cls, letters: Iterable[str]) -> 'LetterSet':
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)


def enumerate_permutations(letter_set: LetterSet) -> List[RootWord]:
    """
    Every ordering of the set's letters, |s|! roots in total.

    Output is ascending by weight tuple: the letters are held in weight
    order and itertools.permutations preserves input order lexicographically.
    """
    if not isinstance(letter_set, LetterSet):
        letter_set = LetterSet.of(letter_set)
    return [RootWord(ordering) for ordering in permutations(letter_set.letters)]
