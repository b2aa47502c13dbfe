"""Inversion statistics on B_n and the classical Lehmer code on S_n.

A positive root ``v`` is an inversion of ``pi`` when ``pi`` sends it to a
negative root.  ``inv_i`` counts the inversions among the roots
``e_i, e_i + e_j, e_i - e_j`` (``j > i``), so the statistics for
``i = 1..n`` partition ``inv``.

Two routes are kept side by side: ``*_root`` functions count roots
directly and serve as the oracle, the closed forms scan the window.
"""

from __future__ import annotations

from typing import Sequence

from .errors import IndexOutOfRange, NotAPermutation
from .signed_perm import SignedPermutation, _as_perm, act_on_root, phi_i, positive_roots

__all__ = [
    "inv_root",
    "inv_i_root",
    "inv_i_closed",
    "inv_closed",
    "inversion_vector",
    "first_inversion",
    "lehmer_code",
    "check_permutation",
]

Window = SignedPermutation | Sequence[int]


def _check_index(pi: SignedPermutation, i: int) -> None:
    if not 1 <= i <= pi.n:
        raise IndexOutOfRange(f"i = {i} outside 1..{pi.n}")


def inv_root(pi: Window) -> int:
    pi = _as_perm(pi)
    return sum(1 for v in positive_roots(pi.n) if not act_on_root(pi, v).positive)


def inv_i_root(pi: Window, i: int) -> int:
    pi = _as_perm(pi)
    _check_index(pi, i)
    return sum(1 for v in phi_i(pi.n, i) if not act_on_root(pi, v).positive)


def inv_i_closed(pi: Window, i: int) -> int:
    """``inv_i`` from the window alone.

    With ``j = |pi(i)|`` and ``smaller``/``larger`` counting later positions
    ``k > i`` with ``|pi(k)|`` below/above ``j``: a positive image gives
    ``smaller``, a negative one ``1 + smaller + 2 * larger``.
    """
    pi = _as_perm(pi)
    _check_index(pi, i)
    img = pi.images[i - 1]
    j = abs(img)
    smaller = larger = 0
    for x in pi.images[i:]:
        if abs(x) < j:
            smaller += 1
        else:
            larger += 1
    if img > 0:
        return smaller
    return 1 + smaller + 2 * larger


def inv_closed(pi: Window) -> int:
    return sum(inversion_vector(pi))


def inversion_vector(pi: Window) -> list[int]:
    """``[inv_1(pi), ..., inv_n(pi)]``; entry ``i`` is at most ``2(n - i) + 1``."""
    pi = _as_perm(pi)
    return [inv_i_closed(pi, i) for i in range(1, pi.n + 1)]


def first_inversion(pi: Window) -> int:
    """``inv_1``: ``j - 1`` if ``pi(1) = j`` and ``2n - j`` if ``pi(1) = -j``."""
    pi = _as_perm(pi)
    img = pi.images[0]
    return img - 1 if img > 0 else 2 * pi.n + img


def check_permutation(sigma: Sequence[int]) -> list[int]:
    values = [int(x) for x in sigma]
    if sorted(values) != list(range(1, len(values) + 1)):
        raise NotAPermutation(f"{values} is not a permutation of 1..{len(values)}")
    return values


def lehmer_code(sigma: Sequence[int]) -> list[int]:
    """``L[i] = #{j > i : sigma[j] < sigma[i]}`` for a permutation of ``1..n``."""
    values = check_permutation(sigma)
    return [sum(1 for y in values[i + 1 :] if y < x) for i, x in enumerate(values)]
