"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RadixCodeError(Exception):
    """Base class for domain errors raised by :mod:`radixcode`."""


class InvalidAlpha(RadixCodeError, ValueError):
    """Some maximal digit is below 1, so the sequence is not a number system."""


class CapacityExceeded(RadixCodeError, ValueError):
    """A finite (custom) system has too few places for the requested value."""


class DigitOutOfRange(RadixCodeError, ValueError):
    """A digit exceeds the maximal digit allowed at its place."""


class DigitSyntaxError(RadixCodeError, ValueError):
    """A digit string does not match the grammar.

    ``offset`` is the 0-based position of the offending character.
    """

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset} in {text!r}")
        self.text = text
        self.offset = offset


class PrecisionExhausted(RadixCodeError, ValueError):
    """More digits were requested than the decimal input can certify."""

    def __init__(self, message: str, certified: int):
        super().__init__(message)
        self.certified = certified


class NotASignedPermutation(RadixCodeError, ValueError):
    pass


class NotAPermutation(RadixCodeError, ValueError):
    pass


class DimensionMismatch(RadixCodeError, ValueError):
    pass


class IndexOutOfRange(RadixCodeError, IndexError):
    pass


class RankOutOfRange(RadixCodeError, ValueError):
    pass


class CapExceeded(RadixCodeError, ValueError):
    """Exhaustive enumeration requested above the configured size cap."""


class UnknownCheck(RadixCodeError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown check"
