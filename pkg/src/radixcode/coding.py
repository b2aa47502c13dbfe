"""Ranking bijections.

``S_n <-> {0, ..., n! - 1}`` through the Lehmer code read as factorial
digits, and ``B_n <-> {0, ..., 2**n n! - 1}`` through the i-inversions read
as hyperoctahedral digits.

Digit order matters: the most significant hyperoctahedral place
(weight ``2**(n-1) (n-1)!``) holds ``inv_1`` and place 0 holds ``inv_n``.
In other words the hyperoctahedral digits of the rank, printed
most-significant first, are exactly ``inv_1, inv_2, ..., inv_n``.

    >>> rank_hyperoctahedral([-2, -1]).value
    5
    >>> unrank_hyperoctahedral(5, 2).images
    (-2, -1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import RankOutOfRange
from .inversion import Window, check_permutation, inversion_vector, lehmer_code
from .number_system import decode_integer, encode_integer, hyperoctahedral
from .signed_perm import SignedPermutation, _as_perm

__all__ = [
    "Family",
    "Rank",
    "group_order",
    "rank_hyperoctahedral",
    "unrank_hyperoctahedral",
    "rank_symmetric",
    "unrank_symmetric",
    "bar_reduction",
]


class Family(enum.Enum):
    SYMMETRIC = "sym"
    HYPEROCTAHEDRAL = "hyp"


def group_order(family: Family, n: int) -> int:
    if family is Family.SYMMETRIC:
        return factorial(n)
    return 2**n * factorial(n)


@dataclass(frozen=True)
class Rank:
    value: int
    n: int
    family: Family

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RankOutOfRange(f"group size must be >= 1, got {self.n}")
        order = group_order(self.family, self.n)
        if not 0 <= self.value < order:
            raise RankOutOfRange(
                f"rank {self.value} outside 0..{order - 1} for {self.family.value} n={self.n}"
            )

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


_HYP = hyperoctahedral()


def rank_hyperoctahedral(pi: Window) -> Rank:
    """``sum(inv_{n-i+1}(pi) * 2**(i-1) (i-1)!  for i in 1..n)``."""
    pi = _as_perm(pi)
    vec = inversion_vector(pi)
    value = decode_integer(_HYP, list(reversed(vec)))
    return Rank(value, pi.n, Family.HYPEROCTAHEDRAL)


def _coerce_rank(r: Rank | int, n: int | None, family: Family) -> Rank:
    if isinstance(r, Rank):
        if r.family is not family:
            raise RankOutOfRange(f"expected a {family.value} rank, got {r.family.value}")
        if n is not None and n != r.n:
            raise RankOutOfRange(f"rank is for n={r.n}, not n={n}")
        return r
    if n is None:
        raise TypeError("n is required when unranking a plain integer")
    return Rank(int(r), n, family)


def unrank_hyperoctahedral(r: Rank | int, n: int | None = None) -> SignedPermutation:
    """Inverse of :func:`rank_hyperoctahedral`.

    Place by place, with ``m`` unused absolute values ``R`` (sorted) and
    ``c = inv_i``: ``c < m`` selects ``+R[c]``, otherwise ``-R[2m - 1 - c]``.
    """
    r = _coerce_rank(r, n, Family.HYPEROCTAHEDRAL)
    digits = list(encode_integer(_HYP, r.value))
    digits += [0] * (r.n - len(digits))
    remaining = list(range(1, r.n + 1))
    images = []
    for c in reversed(digits):
        m = len(remaining)
        if c < m:
            images.append(remaining.pop(c))
        else:
            images.append(-remaining.pop(2 * m - 1 - c))
    return SignedPermutation(tuple(images))


def rank_symmetric(sigma: Sequence[int]) -> Rank:
    """``sum(L[i] * (n - i)!)`` over the 1-based Lehmer code ``L``."""
    code = lehmer_code(sigma)
    n = len(code)
    value = sum(c * factorial(n - 1 - k) for k, c in enumerate(code))
    return Rank(value, n, Family.SYMMETRIC)


def unrank_symmetric(r: Rank | int, n: int | None = None) -> list[int]:
    r = _coerce_rank(r, n, Family.SYMMETRIC)
    remaining = list(range(1, r.n + 1))
    value = r.value
    out = []
    for k in range(r.n):
        c, value = divmod(value, factorial(r.n - 1 - k))
        out.append(remaining.pop(c))
    return check_permutation(out)


def bar_reduction(pi: Window) -> SignedPermutation:
    """Drop the first column of ``pi`` in ``B_{n+1}`` and standardise.

    Images with ``|pi(k)| > |pi(1)|`` move one step towards zero, smaller
    ones are kept, and positions ``2..n+1`` become ``1..n``.  The relative
    order of absolute values and all signs survive, so
    ``rank(pi) % 2**n n! == rank(bar_reduction(pi))``.
    """
    pi = _as_perm(pi)
    if pi.n < 2:
        raise ValueError("bar reduction needs n + 1 >= 2")
    pivot = abs(pi.images[0])
    out = []
    for x in pi.images[1:]:
        if abs(x) > pivot:
            x = x - 1 if x > 0 else x + 1
        out.append(x)
    return SignedPermutation(tuple(out))
