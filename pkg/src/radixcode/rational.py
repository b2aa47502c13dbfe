"""Fractional expansions in an extended number system.

Negative places have weights ``1 / weight(i)``.  The fractional digit
``frac[i]`` is the coefficient of ``1 / weight(i + 1)``; it is produced by
multiplying the running remainder by ``beta(i)`` and taking the integer
part, so ``0 <= frac[i] <= alpha(i)``.

    >>> from radixcode.number_system import hyperoctahedral
    >>> str(expand_rational(hyperoctahedral(), Fraction(13, 16), 8))
    '0.1:2:3'
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple, Union

from .errors import DigitOutOfRange, PrecisionExhausted
from .number_system import (
    DigitSequence,
    NumberSystem,
    SystemKind,
    SystemSpec,
    decode_integer,
    encode_integer,
    format_digits,
    make_system,
    parse_digits,
)

__all__ = [
    "Status",
    "ExtendedExpansion",
    "Termination",
    "as_rational",
    "expand_rational",
    "value_of",
    "is_terminating",
    "nonterminating_form",
    "expand_decimal",
    "parse_expansion",
]

RationalLike = Union[Fraction, int, str]


class Status(enum.Enum):
    TERMINATED = "terminated"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class ExtendedExpansion:
    """Signed expansion with an integer part and finitely many fractional digits.

    ``certified`` is the number of fractional digits known to be correct;
    it equals ``len(frac_digits)`` except for expansions of approximate
    decimal input built with ``strict=False``.
    """

    sign: int
    integer_part: DigitSequence
    frac_digits: tuple[int, ...]
    status: Status
    certified: int | None = None

    @property
    def terminated(self) -> bool:
        return self.status is Status.TERMINATED

    def __str__(self) -> str:
        return format_digits(self.sign, self.integer_part, self.frac_digits)


class Termination(NamedTuple):
    terminating: bool
    place: int | None  # smallest n with denominator | weight(n)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``p/q`` strings, ints and fractions to a reduced :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"expected a rational such as p/q, got {value!r}") from exc


def _frac_digits(system: NumberSystem, num: int, den: int) -> Iterator[tuple[int, int]]:
    """Yield ``(digit, remainder numerator)`` for ``num/den`` in ``[0, 1)``.

    Runs forever; after termination it keeps yielding zeros.
    """
    i = 0
    while True:
        d, num = divmod(num * system.beta(i), den)
        yield d, num
        i += 1


def expand_rational(system: SystemSpec, r: RationalLike, max_digits: int) -> ExtendedExpansion:
    """Expand ``r`` with at most ``max_digits`` fractional digits.

    The status is ``TERMINATED`` exactly when the remainder reaches zero
    within the budget, in which case :func:`value_of` returns ``r``.
    """
    system = make_system(system)
    if max_digits < 1:
        raise ValueError("max_digits must be >= 1")
    r = as_rational(r)
    sign = -1 if r < 0 else 1
    a = abs(r)
    whole, num = divmod(a.numerator, a.denominator)
    integer = encode_integer(system, whole)
    frac: list[int] = []
    if num:
        for d, num in _frac_digits(system, num, a.denominator):
            frac.append(d)
            if num == 0 or len(frac) == max_digits:
                break
    status = Status.TERMINATED if num == 0 else Status.TRUNCATED
    return ExtendedExpansion(sign, integer, tuple(frac), status, len(frac))


def value_of(system: SystemSpec, e: ExtendedExpansion) -> Fraction:
    """Exact value of the stored digits (ignores what a truncation dropped)."""
    system = make_system(system)
    total = Fraction(decode_integer(system, e.integer_part))
    for i, d in enumerate(e.frac_digits):
        if d > system.alpha(i):
            raise DigitOutOfRange(
                f"fractional digit {d} at position {i} exceeds alpha({i}) = {system.alpha(i)}"
            )
        total += Fraction(d, system.weight(i + 1))
    return -total if e.sign < 0 else total


def is_terminating(system: SystemSpec, r: RationalLike) -> Termination:
    """Decide whether ``r`` has a finite expansion.

    Strips ``gcd(q, beta(i))`` off the reduced denominator ``q`` place by
    place.  Reaching 1 after ``n`` places means ``q`` divides ``weight(n)``.
    The search is capped at ``2 q`` places; fixed bases stop at the first
    place without progress since their radix never changes.
    """
    system = make_system(system)
    q = as_rational(r).denominator
    bound = 2 * q
    if system.length is not None:
        bound = min(bound, system.length)
    i = 0
    while q > 1 and i < bound:
        g = gcd(q, system.beta(i))
        if g == 1 and system.kind is SystemKind.FIXED:
            break
        q //= g
        i += 1
    if q == 1:
        return Termination(True, i)
    return Termination(False, None)


def nonterminating_form(system: SystemSpec, n: int, k: int) -> tuple[int, ...]:
    """Fractional digits of ``1 / weight(n)`` written with maximal digits.

    Returns ``n + k`` digits: zeros before place ``n`` and ``alpha(i)`` for
    ``n <= i < n + k``.  Their value falls short of ``1 / weight(n)`` by
    exactly ``1 / weight(n + k)``.
    """
    system = make_system(system)
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return tuple([0] * n + [system.alpha(i) for i in range(n, n + k)])


def _decimal_parts(x: str) -> tuple[Fraction, Fraction]:
    """Exact value of a decimal literal and its default tolerance."""
    try:
        dec = Decimal(x.strip())
    except InvalidOperation as exc:
        raise ValueError(f"not a decimal literal: {x!r}") from exc
    if not dec.is_finite():
        raise ValueError(f"not a finite decimal: {x!r}")
    exponent = dec.as_tuple().exponent
    value = Fraction(dec)
    if exponent >= 0:
        return value, Fraction(0)
    # half a unit in the last written place
    return value, Fraction(1, 2 * 10 ** (-exponent))


def _certified_prefix(system: NumberSystem, lo: Fraction, hi: Fraction, limit: int) -> int:
    """Fractional digits shared by every value in ``[lo, hi]``, up to ``limit``.

    Returns -1 when even the sign or integer part is uncertain.  Greedy
    expansions are monotone in the value, so comparing the endpoints is
    enough.
    """
    if lo == hi:
        return limit
    if lo < 0 < hi:
        return -1
    a, b = (lo, hi) if lo >= 0 else (-hi, -lo)
    wa, na = divmod(a.numerator, a.denominator)
    wb, nb = divmod(b.numerator, b.denominator)
    if wa != wb:
        return -1
    count = 0
    da, db = a.denominator, b.denominator
    for i in range(limit):
        beta = system.beta(i)
        xa, na = divmod(na * beta, da)
        xb, nb = divmod(nb * beta, db)
        if xa != xb:
            break
        count += 1
    return count


def expand_decimal(
    system: SystemSpec,
    x: str,
    max_digits: int,
    *,
    tolerance: RationalLike | None = None,
    strict: bool = True,
) -> ExtendedExpansion:
    """Expand a real number given as a decimal literal.

    The literal stands for any real within ``tolerance`` of its exact
    value; by default that is half a unit in its last decimal place, or
    zero for literals without a fractional part.  Only digits shared by the
    whole interval are emitted.  With ``strict`` a request for more digits
    than that raises :class:`PrecisionExhausted`; otherwise the expansion
    is cut to the certified prefix.

    ``TERMINATED`` is only reported for exact input (zero tolerance).
    """
    system = make_system(system)
    if max_digits < 1:
        raise ValueError("max_digits must be >= 1")
    value, default_tol = _decimal_parts(x)
    tol = default_tol if tolerance is None else abs(as_rational(tolerance))
    if tol == 0:
        return expand_rational(system, value, max_digits)

    certified = _certified_prefix(system, value - tol, value + tol, max_digits)
    if certified < max_digits:
        msg = (
            f"{x!r} certifies only {max(certified, 0)} fractional digit(s) in {system}"
            if certified >= 0
            else f"{x!r} does not even certify its integer part in {system}"
        )
        if strict or certified < 0:
            raise PrecisionExhausted(msg, max(certified, 0))
        max_digits = certified

    sign = -1 if value < 0 else 1
    a = abs(value)
    whole, num = divmod(a.numerator, a.denominator)
    frac = []
    if max_digits:
        for d, _ in _frac_digits(system, num, a.denominator):
            frac.append(d)
            if len(frac) == max_digits:
                break
    return ExtendedExpansion(
        sign, encode_integer(system, whole), tuple(frac), Status.TRUNCATED, len(frac)
    )


def parse_expansion(text: str) -> ExtendedExpansion:
    """Read a digit string back into a (finite, terminated) expansion."""
    sign, integer, frac = parse_digits(text)
    return ExtendedExpansion(sign, integer, frac, Status.TERMINATED, len(frac))
