"""Generalised mixed-radix number systems over the non-negative integers.

A system is fixed by its sequence of maximal digits ``alpha``.  With
``beta(i) = alpha(i) + 1`` the place weights are forced to be::

    weight(0) = 1,  weight(i + 1) = weight(i) * beta(i)

and every non-negative integer then has exactly one digit expansion
``sum(d[i] * weight(i))`` with ``0 <= d[i] <= alpha(i)``.

Digits are stored little-endian (index 0 is the coefficient of weight 0)
and printed most-significant first, separated by colons::

    >>> hyp = hyperoctahedral()
    >>> format_digits(1, encode_integer(hyp, 79))
    '1:3:3:1'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    CapacityExceeded,
    DigitOutOfRange,
    DigitSyntaxError,
    InvalidAlpha,
)

__all__ = [
    "SystemKind",
    "NumberSystem",
    "DigitSequence",
    "fixed",
    "factorial_system",
    "hyperoctahedral",
    "custom",
    "make_system",
    "encode_integer",
    "decode_integer",
    "parse_digits",
    "format_digits",
]


class SystemKind(enum.Enum):
    FIXED = "fixed"
    FACTORIAL = "factorial"
    HYPEROCTAHEDRAL = "hyperoctahedral"
    CUSTOM = "alpha"


@lru_cache(maxsize=None)
def _double_factorial_even(n: int) -> int:
    # 2**n * n!, the order of the hyperoctahedral group B_n
    return (2**n) * factorial(n)


@dataclass(frozen=True)
class NumberSystem:
    """An enumeration system given by its maximal digits.

    Build instances with :func:`fixed`, :func:`factorial_system`,
    :func:`hyperoctahedral`, :func:`custom` or :func:`make_system`; the
    constructor validates but does not normalise its arguments.

    Custom systems are finite: with ``L`` maximal digits, ``alpha(i)`` is
    defined for ``i < L`` and ``weight(i)`` for ``i <= L``.
    """

    kind: SystemKind
    base: int | None = None
    alphas: tuple[int, ...] = ()
    _weights: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind is SystemKind.FIXED:
            if self.base is None or self.base < 2:
                raise InvalidAlpha(f"fixed base must be >= 2, got {self.base}")
        elif self.kind is SystemKind.CUSTOM:
            if not self.alphas:
                raise InvalidAlpha("custom alpha list must be nonempty")
            for i, a in enumerate(self.alphas):
                if a < 1:
                    raise InvalidAlpha(f"alpha({i}) = {a} < 1")
            weights = [1]
            for a in self.alphas:
                weights.append(weights[-1] * (a + 1))
            object.__setattr__(self, "_weights", tuple(weights))

    @property
    def length(self) -> int | None:
        """Number of places, or ``None`` for the unbounded systems."""
        return len(self.alphas) if self.kind is SystemKind.CUSTOM else None

    @property
    def capacity(self) -> int | None:
        """Smallest integer that does not fit, ``None`` when unbounded."""
        return self._weights[-1] if self.kind is SystemKind.CUSTOM else None

    def _check_place(self, i: int, *, weight: bool = False) -> None:
        if i < 0:
            raise IndexError(f"negative place {i}")
        n = self.length
        if n is not None and (i > n or (i == n and not weight)):
            raise CapacityExceeded(f"place {i} is beyond the {n} places of {self}")

    def alpha(self, i: int) -> int:
        self._check_place(i)
        if self.kind is SystemKind.FIXED:
            return self.base - 1
        if self.kind is SystemKind.FACTORIAL:
            return i + 1
        if self.kind is SystemKind.HYPEROCTAHEDRAL:
            return 2 * i + 1
        return self.alphas[i]

    def beta(self, i: int) -> int:
        return self.alpha(i) + 1

    def weight(self, i: int) -> int:
        self._check_place(i, weight=True)
        if self.kind is SystemKind.FIXED:
            return self.base**i
        if self.kind is SystemKind.FACTORIAL:
            return factorial(i + 1)
        if self.kind is SystemKind.HYPEROCTAHEDRAL:
            return _double_factorial_even(i)
        return self._weights[i]

    def alphas_upto(self, n: int) -> list[int]:
        return [self.alpha(i) for i in range(n)]

    def weights_upto(self, n: int) -> list[int]:
        return [self.weight(i) for i in range(n)]

    def __str__(self) -> str:
        if self.kind is SystemKind.FIXED:
            return f"fixed:{self.base}"
        if self.kind is SystemKind.CUSTOM:
            return "alpha:" + ",".join(map(str, self.alphas))
        return self.kind.value


def fixed(m: int) -> NumberSystem:
    """Classical base-``m`` positional system."""
    return NumberSystem(SystemKind.FIXED, base=m)


def factorial_system() -> NumberSystem:
    """Weights ``(i+1)!`` with maximal digit ``i+1`` at place ``i``."""
    return NumberSystem(SystemKind.FACTORIAL)


def hyperoctahedral() -> NumberSystem:
    """Weights ``2**i * i!`` with maximal digit ``2i+1`` at place ``i``."""
    return NumberSystem(SystemKind.HYPEROCTAHEDRAL)


def custom(alphas: Iterable[int]) -> NumberSystem:
    return NumberSystem(SystemKind.CUSTOM, alphas=tuple(int(a) for a in alphas))


SystemSpec = Union[NumberSystem, str]


def make_system(spec: SystemSpec) -> NumberSystem:
    """Build a system from a descriptor.

    Accepted strings are ``fixed:<m>``, ``factorial``, ``hyperoctahedral``
    and ``alpha:<a0>,<a1>,...``.  A :class:`NumberSystem` is returned as is.
    """
    if isinstance(spec, NumberSystem):
        return spec
    text = spec.strip().lower()
    if text == "factorial":
        return factorial_system()
    if text in ("hyperoctahedral", "hyp"):
        return hyperoctahedral()
    head, sep, tail = text.partition(":")
    try:
        if sep and head == "fixed":
            return fixed(int(tail))
        if sep and head == "alpha":
            return custom(int(part) for part in tail.split(","))
    except ValueError as exc:
        if isinstance(exc, InvalidAlpha):
            raise
        raise ValueError(f"malformed system descriptor {spec!r}") from exc
    raise ValueError(f"unknown system descriptor {spec!r}")


@dataclass(frozen=True)
class DigitSequence(Sequence[int]):
    """Little-endian digit vector of a non-negative integer.

    Leading (most-significant) zeros are stripped on construction, and the
    value zero is stored as ``(0,)``.
    """

    digits: tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        ds = list(self.digits)
        for i, d in enumerate(ds):
            if d < 0:
                raise DigitOutOfRange(f"negative digit {d} at place {i}")
        while len(ds) > 1 and ds[-1] == 0:
            ds.pop()
        object.__setattr__(self, "digits", tuple(ds) or (0,))

    @classmethod
    def from_msf(cls, digits: Iterable[int]) -> DigitSequence:
        """Build from most-significant-first digits, the printed order."""
        return cls(tuple(reversed(tuple(digits))))

    def msf(self) -> tuple[int, ...]:
        return self.digits[::-1]

    def __getitem__(self, i):  # type: ignore[override]
        return self.digits[i]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        return format_digits(1, self)


def encode_integer(system: SystemSpec, a: int) -> DigitSequence:
    """Expand ``a >= 0`` by repeated division by ``beta(0), beta(1), ...``."""
    system = make_system(system)
    if a < 0:
        raise ValueError(f"cannot encode negative integer {a}; handle the sign separately")
    cap = system.capacity
    if cap is not None and a >= cap:
        raise CapacityExceeded(f"{a} does not fit in {system} (capacity {cap})")
    digits = []
    q = a
    i = 0
    while True:
        q, r = divmod(q, system.beta(i))
        digits.append(r)
        if q == 0:
            break
        i += 1
    return DigitSequence(tuple(digits))


def decode_integer(system: SystemSpec, digits: Sequence[int]) -> int:
    """Evaluate little-endian ``digits`` as ``sum(d[i] * weight(i))``."""
    system = make_system(system)
    ds = digits if isinstance(digits, DigitSequence) else DigitSequence(tuple(digits))
    n = system.length
    if n is not None and len(ds) > n:
        raise DigitOutOfRange(f"{system} has no place {len(ds) - 1}")
    total = 0
    for i, d in enumerate(ds):
        if d > system.alpha(i):
            raise DigitOutOfRange(f"digit {d} at place {i} exceeds alpha({i}) = {system.alpha(i)}")
        total += d * system.weight(i)
    return total


_GROUP = re.compile(r"[0-9]+")


def _parse_places(text: str, pos: int) -> tuple[list[int], int]:
    """Parse ``places`` starting at ``pos``; returns msf digits and end offset."""
    groups: list[str] = []
    starts: list[int] = []
    while True:
        m = _GROUP.match(text, pos)
        if m is None:
            raise DigitSyntaxError("expected a digit", text, pos)
        groups.append(m.group())
        starts.append(pos)
        pos = m.end()
        if pos < len(text) and text[pos] == ":":
            pos += 1
            continue
        break
    if len(groups) == 1:
        # colon-free group: compact form, one character per place
        return [int(c) for c in groups[0]], pos
    return [int(g) for g in groups], pos


def parse_digits(text: str) -> tuple[int, DigitSequence, tuple[int, ...]]:
    """Parse ``[sign] places ['.' places]`` into ``(sign, integer, fraction)``.

    ``sign`` is ``1`` or ``-1``.  The integer part is returned little-endian;
    the fractional digits are in reading order, so ``fraction[0]`` is the
    first place after the point.  A part without colons is read in compact
    form, one character per place::

        >>> parse_digits("0.1:2:3")
        (1, DigitSequence(digits=(0,)), (1, 2, 3))
    """
    pos = 0
    sign = 1
    if text[:1] in ("+", "-"):
        sign = -1 if text[0] == "-" else 1
        pos = 1
    int_msf, pos = _parse_places(text, pos)
    frac: list[int] = []
    if pos < len(text) and text[pos] == ".":
        frac, pos = _parse_places(text, pos + 1)
    if pos != len(text):
        raise DigitSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
    integer = DigitSequence.from_msf(int_msf)
    if integer.digits == (0,) and not any(frac):
        sign = 1
    return sign, integer, tuple(frac)


def format_digits(
    sign: int,
    digits: Sequence[int],
    frac: Sequence[int] = (),
    *,
    compact: bool = False,
) -> str:
    """Render digits most-significant first, colon separated.

    ``compact=True`` drops the colons, but only when every digit is at most
    9; otherwise the colon form is produced.  A lone place holding a
    multi-character numeral is padded with a zero place (``0:11``, or
    ``11:0`` after the point) so that the output parses back to the same
    value.
    """
    ds = digits if isinstance(digits, DigitSequence) else DigitSequence(tuple(digits))
    msf = ds.msf()
    frac = tuple(frac)
    if compact and all(d <= 9 for d in msf + frac):
        out = "".join(map(str, msf))
        if frac:
            out += "." + "".join(map(str, frac))
    else:
        if len(msf) == 1 and msf[0] > 9:
            msf = (0,) + msf
        out = ":".join(map(str, msf))
        if frac:
            if len(frac) == 1 and frac[0] > 9:
                frac = frac + (0,)
            out += "." + ":".join(map(str, frac))
    if sign < 0 and (ds.digits != (0,) or any(frac)):
        out = "-" + out
    return out
