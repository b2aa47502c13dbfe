"""Signed permutations (the hyperoctahedral group B_n) and the type-B roots.

Elements are stored in window notation: ``images[i - 1] == pi(i)`` with
``pi(-i) == -pi(i)``.  As a linear map of R^n, ``pi`` sends the basis
vector ``e_i`` to ``sign(pi(i)) * e_|pi(i)|``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotASignedPermutation

__all__ = [
    "SignedPermutation",
    "RootKind",
    "Root",
    "from_images",
    "parse_window",
    "identity",
    "compose",
    "inverse",
    "positive_roots",
    "phi_i",
    "all_roots",
    "act_on_root",
]


@dataclass(frozen=True)
class SignedPermutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if n < 1:
            raise NotASignedPermutation("a signed permutation needs n >= 1")
        if 0 in images:
            raise NotASignedPermutation(f"zero entry in {list(images)}")
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise NotASignedPermutation(
                f"absolute values of {list(images)} are not a permutation of 1..{n}"
            )
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the signed index ``i`` (``1 <= |i| <= n``)."""
        if i == 0 or abs(i) > self.n:
            raise IndexError(f"index {i} outside +-1..{self.n}")
        img = self.images[abs(i) - 1]
        return img if i > 0 else -img

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.images)

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def two_row(self) -> str:
        top = " ".join(f"{i:>3}" for i in range(1, self.n + 1))
        bottom = " ".join(f"{x:>3}" for x in self.images)
        return f"{top}\n{bottom}"


def from_images(images: Iterable[int]) -> SignedPermutation:
    return SignedPermutation(tuple(images))


def parse_window(text: str) -> SignedPermutation:
    """Read ``-2,-1`` style text or a JSON array such as ``[-2, -1]``."""
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise NotASignedPermutation(f"cannot read a window from {text!r}") from exc
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise NotASignedPermutation(f"cannot read a window from {text!r}")
    return from_images(values)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """``(sigma o tau)(i) = sigma(tau(i))``."""
    if sigma.n != tau.n:
        raise DimensionMismatch(f"cannot compose elements of B_{sigma.n} and B_{tau.n}")
    return SignedPermutation(tuple(sigma(t) for t in tau.images))


def inverse(pi: SignedPermutation) -> SignedPermutation:
    out = [0] * pi.n
    for i, img in enumerate(pi.images, start=1):
        out[abs(img) - 1] = i if img > 0 else -i
    return SignedPermutation(tuple(out))


class RootKind(enum.Enum):
    SINGLE = "single"  # s * e_i
    SUM = "sum"  # s * (e_i + e_j)
    DIFF = "diff"  # s * (e_i - e_j)


@dataclass(frozen=True)
class Root:
    """A root of type B_n in canonical form: ``i < j`` with the sign pulled out."""

    kind: RootKind
    i: int
    j: int | None = None
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"root sign must be +-1, got {self.sign}")
        if self.kind is RootKind.SINGLE:
            if self.j is not None:
                raise ValueError("single roots have no second index")
        elif self.j is None or not 1 <= self.i < self.j:
            raise ValueError(f"pair roots need 1 <= i < j, got i={self.i}, j={self.j}")
        if self.i < 1:
            raise ValueError(f"root index must be >= 1, got {self.i}")

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def __neg__(self) -> Root:
        return Root(self.kind, self.i, self.j, -self.sign)

    def vector(self) -> dict[int, int]:
        """Coordinates as ``{index: coefficient}``."""
        if self.kind is RootKind.SINGLE:
            return {self.i: self.sign}
        second = self.sign if self.kind is RootKind.SUM else -self.sign
        return {self.i: self.sign, self.j: second}

    @classmethod
    def from_vector(cls, coords: dict[int, int]) -> Root:
        items = sorted((k, c) for k, c in coords.items() if c)
        if len(items) == 1 and abs(items[0][1]) == 1:
            (k, c), = items
            return cls(RootKind.SINGLE, k, None, c)
        if len(items) == 2 and all(abs(c) == 1 for _, c in items):
            (a, ca), (b, cb) = items
            return cls(RootKind.SUM if ca == cb else RootKind.DIFF, a, b, ca)
        raise ValueError(f"{coords} is not a type-B root")

    def __str__(self) -> str:
        if self.kind is RootKind.SINGLE:
            body = f"e{self.i}"
        else:
            op = "+" if self.kind is RootKind.SUM else "-"
            body = f"(e{self.i}{op}e{self.j})"
        return body if self.sign > 0 else "-" + body


def phi_i(n: int, i: int) -> list[Root]:
    """Positive roots whose smaller index is ``i``: ``e_i`` and ``e_i +- e_j``, j > i."""
    if not 1 <= i <= n:
        raise IndexError(f"i = {i} outside 1..{n}")
    roots = [Root(RootKind.SINGLE, i)]
    for j in range(i + 1, n + 1):
        roots.append(Root(RootKind.SUM, i, j))
        roots.append(Root(RootKind.DIFF, i, j))
    return roots


def positive_roots(n: int) -> list[Root]:
    """The ``n**2`` positive roots, grouped by :func:`phi_i` slice."""
    return [root for i in range(1, n + 1) for root in phi_i(n, i)]


def all_roots(n: int) -> list[Root]:
    pos = positive_roots(n)
    return pos + [-r for r in pos]


def act_on_root(pi: SignedPermutation, v: Root) -> Root:
    """Image of ``v`` under the linear map ``pi``."""
    coords = v.vector()
    if max(coords) > pi.n:
        raise IndexError(f"root {v} does not live in R^{pi.n}")
    image: dict[int, int] = {}
    for k, c in coords.items():
        target = pi(k)
        image[abs(target)] = c * (1 if target > 0 else -1)
    return Root.from_vector(image)


def _as_perm(x: SignedPermutation | Sequence[int]) -> SignedPermutation:
    return x if isinstance(x, SignedPermutation) else from_images(x)
