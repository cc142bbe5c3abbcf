"""
Exception hierarchy for farahidy
"""

from typing import Optional


class FarahidyError(Exception):
    """Base class for all farahidy errors."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message
        # Set by the store when the error is tied to a corpus record
        self.line: Optional[int] = None

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


# Alphabet / normalization

class NormalizationError(FarahidyError, ValueError):
    """Raw text could not be reduced to root letters."""


class UnknownLetter(NormalizationError):
    def __init__(self, letter: str):
        super().__init__(f"Unknown letter {letter!r} (U+{ord(letter[:1] or ' '):04X})")
        self.letter = letter


class UnmappableCharacter(NormalizationError):
    def __init__(self, position: int, character: str):
        super().__init__(
            f"Unmappable character {character!r} (U+{ord(character):04X}) at position {position}"
        )
        self.position = position
        self.character = character


class BareHamza(NormalizationError):
    def __init__(self, position: int):
        super().__init__(f"Standalone hamza at position {position} cannot be a root letter")
        self.position = position


class WeightOutOfRange(FarahidyError, ValueError):
    def __init__(self, weight: int):
        super().__init__(f"Letter weight {weight} outside [0, 28]")
        self.weight = weight


# Roots and indexes

class InvalidSyllable(FarahidyError, ValueError):
    def __init__(self, r):
        super().__init__(f"Root length {r!r} is not one of 2, 3, 4, 5")
        self.r = r


class InvalidRoot(FarahidyError, ValueError):
    pass


class InvalidLetterSet(FarahidyError, ValueError):
    pass


class IndexOutOfRange(FarahidyError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"Index {index} outside [1, 17847760]")
        self.index = index


# Lexicon

class DuplicateIndex(FarahidyError, ValueError):
    def __init__(self, index: int, first_headword: str, second_headword: str):
        super().__init__(
            f"Index {index} assigned twice: {first_headword!r} and {second_headword!r}"
        )
        self.index = index
        self.first_headword = first_headword
        self.second_headword = second_headword


class NotFound(FarahidyError, LookupError):
    def __init__(self, index: int):
        super().__init__(f"No entry at index {index}")
        self.index = index


class RecordSourceError(FarahidyError, ValueError):
    """A corpus file is unreadable or a line is malformed."""


class LexiconFormatError(FarahidyError):
    """Base class for binary lexicon file errors."""


class BadMagic(LexiconFormatError):
    def __init__(self, magic: bytes):
        super().__init__(f"Bad magic bytes {magic!r}, expected b'FRHD'")
        self.magic = magic


class BadVersion(LexiconFormatError):
    def __init__(self, version: int):
        super().__init__(f"Unsupported lexicon format version {version}")
        self.version = version


class CorruptRecord(LexiconFormatError):
    def __init__(self, offset: int, reason: str):
        super().__init__(f"Corrupt record at byte offset {offset}: {reason}")
        self.offset = offset
        self.reason = reason


class TruncatedFile(LexiconFormatError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"Truncated lexicon file: need {expected} bytes, have {actual}")
        self.expected = expected
        self.actual = actual


class ConfigError(FarahidyError, ValueError):
    pass
