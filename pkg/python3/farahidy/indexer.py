"""
Root word <-> lexicon index mapping.

A root of L letters (2 <= L <= 5) is read as digits d1..dL, d1 being the
first letter in reading order, each digit its Al-Farahidy weight:

    index = d5*28^4 + d4*28^3 + d3*28^2 + (d2 - 1)*28 + d1

Absent digits are 0. Length classes occupy consecutive, gap-free index
ranges, so the map is a bijection from all with-repetition roots onto
[1, 17847760].
"""

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from .alphabet import ALPHABET_SIZE, is_root_letter, letter_of, normalize_text, weight_of
from .errors import IndexOutOfRange, InvalidRoot, InvalidSyllable

ROOT_LENGTHS = (2, 3, 4, 5)
MIN_LENGTH = ROOT_LENGTHS[0]
MAX_LENGTH = ROOT_LENGTHS[-1]

BASE = ALPHABET_SIZE
PAIR_SPACE = BASE * BASE  # the two low digits together
MIN_INDEX = 1
MAX_INDEX = sum(BASE ** r for r in ROOT_LENGTHS)  # 17,847,760


def check_syllable(r: int) -> int:
    """Validate a root length; return it unchanged."""
    if isinstance(r, bool) or r not in ROOT_LENGTHS:
        raise InvalidSyllable(r)
    return r


@dataclass(frozen=True)
class RootWord:
    """2-5 root letters in reading order; repeats allowed, hamza never."""

    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)

        if not MIN_LENGTH <= len(letters) <= MAX_LENGTH:
            raise InvalidRoot(
                f"Root must have {MIN_LENGTH}-{MAX_LENGTH} letters, got {len(letters)}"
            )
        for letter in letters:
            if not isinstance(letter, str) or not is_root_letter(letter):
                raise InvalidRoot(f"{letter!r} is not a root letter")

    @classmethod
    def from_text(cls, raw: str) -> 'RootWord':
        """Normalize raw text and build a root from it."""
        return cls(tuple(normalize_text(raw)))

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> 'RootWord':
        letters = []
        for weight in weights:
            if weight == 0:
                raise InvalidRoot("Weight 0 (hamza) cannot be a root digit")
            letters.append(letter_of(weight))
        return cls(tuple(letters))

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(weight_of(letter) for letter in self.letters)

    @property
    def text(self) -> str:
        return ''.join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.text


WordLike = Union[RootWord, Iterable[str]]


def _as_root(word: WordLike) -> RootWord:
    if isinstance(word, RootWord):
        return word
    # Strings are taken as already-normalized letters
    return RootWord(tuple(word))


def digit_vector(word: WordLike) -> Tuple[int, int, int, int, int]:
    """Return (d1, d2, d3, d4, d5) with zeros past the word's length."""
    weights = _as_root(word).weights
    return tuple(weights + (0,) * (MAX_LENGTH - len(weights)))


def encode(word: WordLike) -> int:
    """Map a root to its unique lexicon index."""
    digits = _as_root(word).weights

    index = (digits[1] - 1) * BASE + digits[0]
    for power, digit in enumerate(digits[2:], start=2):
        index += digit * BASE ** power
    return index


def encode_text(raw: str) -> int:
    """Normalize raw Arabic text and encode it."""
    return encode(RootWord.from_text(raw))


def _check_index(index: int) -> int:
    if isinstance(index, bool) or not isinstance(index, int):
        raise IndexOutOfRange(index)
    if not MIN_INDEX <= index <= MAX_INDEX:
        raise IndexOutOfRange(index)
    return index


def decode(index: int) -> RootWord:
    """Exact inverse of encode."""
    _check_index(index)

    low = (index - 1) % PAIR_SPACE + 1
    digits = [(low - 1) % BASE + 1, (low - 1) // BASE + 1]

    rest = (index - low) // PAIR_SPACE
    while rest > 0:
        digit = (rest - 1) % BASE + 1
        digits.append(digit)
        rest = (rest - digit) // BASE

    return RootWord.from_weights(digits)


def index_range(r: int) -> Tuple[int, int]:
    """Inclusive index interval holding every root of length r."""
    check_syllable(r)
    start = MIN_INDEX + sum(BASE ** k for k in ROOT_LENGTHS if k < r)
    return start, start + BASE ** r - 1


def word_length_of(index: int) -> int:
    """Length class of the root stored at index."""
    _check_index(index)
    for r in ROOT_LENGTHS:
        if index <= index_range(r)[1]:
            return r
    raise IndexOutOfRange(index)


def has_repeated_letters(word: WordLike) -> bool:
    letters = _as_root(word).letters
    return len(set(letters)) != len(letters)
