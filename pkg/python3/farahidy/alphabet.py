"""
Al-Farahidy letter weights and Arabic text normalization
"""

from typing import Dict, List, Tuple

from .errors import BareHamza, UnknownLetter, UnmappableCharacter, WeightOutOfRange


HAMZA = 'ء'  # U+0621

# Phonetic order from the deepest throat letter to the lips; hamza is weight 0.
FARAHIDY_ORDER = (
    'ع', 'ح', 'ه', 'خ', 'غ', 'ق', 'ك', 'ج', 'ش', 'ض',
    'ص', 'س', 'ز', 'ط', 'ت', 'د', 'ظ', 'ذ', 'ث', 'ر',
    'ل', 'ن', 'ف', 'ب', 'م', 'و', 'ي', 'ا',
)

ALPHABET_SIZE = len(FARAHIDY_ORDER)
MAX_WEIGHT = ALPHABET_SIZE


class AlphabetTable:
    """The fixed letter <-> weight bijection."""

    def __init__(self):
        pairs = {HAMZA: 0}
        for weight, letter in enumerate(FARAHIDY_ORDER, start=1):
            pairs[letter] = weight
        self._weights: Dict[str, int] = pairs
        self._letters: Dict[int, str] = {w: l for l, w in pairs.items()}

    def __len__(self) -> int:
        return len(self._weights)

    def __contains__(self, letter: str) -> bool:
        return letter in self._weights

    def pairs(self) -> List[Tuple[str, int]]:
        """All 29 (letter, weight) pairs in weight order."""
        return sorted(self._weights.items(), key=lambda item: item[1])

    def weight_of(self, letter: str) -> int:
        try:
            return self._weights[letter]
        except (KeyError, TypeError):
            raise UnknownLetter(str(letter)) from None

    def letter_of(self, weight: int) -> str:
        if isinstance(weight, bool) or not isinstance(weight, int) or weight not in self._letters:
            raise WeightOutOfRange(weight)
        return self._letters[weight]


ALPHABET = AlphabetTable()


def weight_of(letter: str) -> int:
    """Return the Al-Farahidy weight of one letter (ء is 0)."""
    return ALPHABET.weight_of(letter)


def letter_of(weight: int) -> str:
    """Inverse of weight_of."""
    return ALPHABET.letter_of(weight)


def is_root_letter(ch: str) -> bool:
    """True for the 28 letters that may appear in a root."""
    return ch in ALPHABET and ch != HAMZA


def _build_normalization_map() -> Dict[int, str]:
    table: Dict[int, str] = {}

    # Diacritics (harakat, tanween, shadda, sukun, ...) and dagger alif
    for cp in range(0x064B, 0x0660):
        table[cp] = ''
    table[0x0670] = ''
    # Tatweel
    table[0x0640] = ''

    # Hamza carriers reduce to the carrier letter
    for cp in (0x0623, 0x0625, 0x0622, 0x0671):  # أ إ آ ٱ
        table[cp] = 'ا'
    table[0x0624] = 'و'  # ؤ
    table[0x0626] = 'ي'  # ئ
    table[0x0649] = 'ي'  # ى
    table[0x0629] = 'ه'  # ة
    return table


NORMALIZATION_MAP = _build_normalization_map()


def normalize_text(raw: str) -> List[str]:
    """
    Reduce one raw Arabic word to its base letters in reading order.

    Diacritics and tatweel are stripped and hamza carriers folded onto
    their carrier letter. Anything left that is not one of the 28 root
    letters is an error; positions refer to the raw string.

    Raises:
        BareHamza: a standalone ء survives normalization
        UnmappableCharacter: whitespace, Latin, digits, punctuation, ...
    """
    letters: List[str] = []
    for position, ch in enumerate(raw):
        mapped = NORMALIZATION_MAP.get(ord(ch), ch)
        if not mapped:
            continue
        if mapped == HAMZA:
            raise BareHamza(position)
        if mapped not in ALPHABET:
            raise UnmappableCharacter(position, ch)
        letters.append(mapped)

    return letters
