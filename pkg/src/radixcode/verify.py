"""Brute-force oracles, table reproduction and the named check suite.

Group elements for the exhaustive checks come from :func:`enumerate_group`,
which builds signs x permutations lexicographically and never touches the
coding module, so the bijection checks are not circular.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import factorial
from typing import Callable, Iterator

from . import coding, inversion, rational
from .errors import CapExceeded, UnknownCheck
from .number_system import (
    NumberSystem,
    decode_integer,
    encode_integer,
    factorial_system,
    fixed,
    format_digits,
    hyperoctahedral,
    parse_digits,
)
from .signed_perm import (
    SignedPermutation,
    act_on_root,
    all_roots,
    compose,
    identity,
    inverse,
)

__all__ = [
    "DEFAULT_CAP",
    "TABLE2",
    "Table1Row",
    "VerificationReport",
    "CHECKS",
    "max_n",
    "enumerate_group",
    "enumerate_symmetric",
    "load_table1_golden",
    "reproduce_table1",
    "matches_arithmetic",
    "greedy_digits",
    "greedy_fraction",
    "run_check",
    "run_suite",
]

DEFAULT_CAP = 7

# Example elements of B_2 in table order, with (inv_1, inv_2).
TABLE2: list[tuple[tuple[int, int], tuple[int, int]]] = [
    ((1, 2), (0, 0)),
    ((1, -2), (0, 1)),
    ((2, 1), (1, 0)),
    ((2, -1), (1, 1)),
    ((-2, 1), (2, 0)),
    ((-2, -1), (2, 1)),
    ((-1, 2), (3, 0)),
    ((-1, -2), (3, 1)),
]


def max_n() -> int:
    """Enumeration cap, overridable with ``RADIXCODE_MAX_N``."""
    raw = os.environ.get("RADIXCODE_MAX_N")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"RADIXCODE_MAX_N must be an integer, got {raw!r}") from None


def enumerate_group(n: int, cap: int | None = None) -> Iterator[SignedPermutation]:
    """All ``2**n n!`` elements of B_n: permutations in lexicographic order,
    each followed by its sign patterns (``+`` before ``-``)."""
    cap = max_n() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    if n < 1:
        raise ValueError("n must be >= 1")
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def enumerate_symmetric(n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    cap = max_n() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    return itertools.permutations(range(1, n + 1))


def greedy_digits(a: int, weight: Callable[[int], int]) -> tuple[int, ...]:
    """Most-significant-first digits of ``a`` by top-down division.

    Independent of :func:`encode_integer`: finds the top place first and
    peels off ``a // weight(i)`` from there down.
    """
    top = 0
    while weight(top + 1) <= a:
        top += 1
    out = []
    for i in range(top, -1, -1):
        d, a = divmod(a, weight(i))
        out.append(d)
    return tuple(out)


def _fact_weight(i: int) -> int:
    return factorial(i + 1)


def _hyp_weight(i: int) -> int:
    return 2**i * factorial(i)


@dataclass(frozen=True)
class Table1Row:
    integer: int
    factorial: str
    hyperoctahedral: str
    printed_factorial: str | None = None
    printed_hyperoctahedral: str | None = None
    known_erratum: bool = False

    @property
    def factorial_erratum(self) -> bool:
        """Printed factorial entry disagrees with the arithmetic."""
        return self.printed_factorial is not None and self.printed_factorial != self.factorial

    @property
    def hyperoctahedral_erratum(self) -> bool:
        return (
            self.printed_hyperoctahedral is not None
            and self.printed_hyperoctahedral != self.hyperoctahedral
        )

    @property
    def matches_printed(self) -> bool:
        return not (self.factorial_erratum or self.hyperoctahedral_erratum)


def matches_arithmetic(row: Table1Row) -> bool:
    """Both columns agree with top-down division."""
    return greedy_digits(row.integer, _fact_weight) == _compact(row.factorial) and greedy_digits(
        row.integer, _hyp_weight
    ) == _compact(row.hyperoctahedral)


def load_table1_golden() -> dict[int, tuple[str, str, bool]]:
    """Printed rows 0-79: ``{n: (factorial, hyperoctahedral, known_erratum)}``."""
    text = resources.files("radixcode").joinpath("data/table1.csv").read_text()
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    out = {}
    for row in csv.DictReader(io.StringIO("\n".join(lines))):
        out[int(row["classical"])] = (
            row["factorial"],
            row["hyperoctahedral"],
            row["factorial_erratum"] == "1",
        )
    return out


def reproduce_table1(lo: int = 0, hi: int = 79) -> list[Table1Row]:
    if not 0 <= lo <= hi:
        raise ValueError("need 0 <= lo <= hi")
    fac, hyp = factorial_system(), hyperoctahedral()
    golden = load_table1_golden()
    rows = []
    for a in range(lo, hi + 1):
        printed = golden.get(a)
        rows.append(
            Table1Row(
                a,
                format_digits(1, encode_integer(fac, a), compact=True),
                format_digits(1, encode_integer(hyp, a), compact=True),
                printed[0] if printed else None,
                printed[1] if printed else None,
                printed[2] if printed else False,
            )
        )
    return rows


@dataclass
class VerificationReport:
    name: str
    params: str
    cases: int = 0
    failures: list[tuple[object, object, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "params": self.params,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [[repr(x) for x in f] for f in self.failures[:20]],
            "elapsed": round(self.elapsed, 4),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name:<14} {self.params:<8} {status:<10} cases={self.cases} ({self.elapsed:.3f}s)"


class _Tally:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[tuple[object, object, object]] = []

    def check(self, what: object, expected: object, got: object) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append((what, expected, got))


# --- individual checks -------------------------------------------------------
# Each takes a size parameter and fills a tally.


def _check_table1(t: _Tally, n: int) -> None:
    for row in reproduce_table1(0, 79):
        a = row.integer
        t.check(("hyp", a), greedy_digits(a, _hyp_weight), _compact(row.hyperoctahedral))
        t.check(("hyp-printed", a), row.printed_hyperoctahedral, row.hyperoctahedral)
        t.check(("fac", a), greedy_digits(a, _fact_weight), _compact(row.factorial))
        if row.known_erratum:
            t.check(("fac-erratum-flag", a), True, row.factorial_erratum)
        else:
            t.check(("fac-printed", a), row.printed_factorial, row.factorial)


def _compact(text: str) -> tuple[int, ...]:
    return parse_digits(text)[1].msf()


def _check_table2(t: _Tally, n: int) -> None:
    for k, (window, pair) in enumerate(TABLE2):
        pi = SignedPermutation(window)
        formula = pair[0] * 2 + pair[1]  # inv_1 * B_1 + inv_2 * B_0
        got = (
            tuple(inversion.inversion_vector(pi)),
            tuple(inversion.inv_i_root(pi, i) for i in (1, 2)),
            formula,
            coding.rank_hyperoctahedral(pi).value,
        )
        t.check(window, (pair, pair, k, k), got)


def _check_theorem8(t: _Tally, n: int) -> None:
    order = 2**n * factorial(n)
    seen = Counter()
    for pi in enumerate_group(n):
        r = coding.rank_hyperoctahedral(pi)
        seen[r.value] += 1
        t.check(("unrank-rank", pi.images), pi, coding.unrank_hyperoctahedral(r))
    if set(seen) != set(range(order)) or any(c != 1 for c in seen.values()):
        t.failures.append(("image", f"0..{order - 1} once each", sorted(seen.items())[:10]))
    for value in range(order):
        pi = coding.unrank_hyperoctahedral(value, n)
        if coding.rank_hyperoctahedral(pi).value != value:
            t.failures.append(("rank-unrank", value, coding.rank_hyperoctahedral(pi).value))


def _check_lemma4(t: _Tally, n: int) -> None:
    for pi in enumerate_group(n):
        for i in range(1, n + 1):
            t.check((pi.images, i), inversion.inv_i_root(pi, i), inversion.inv_i_closed(pi, i))


def _check_decomposition(t: _Tally, n: int) -> None:
    for pi in enumerate_group(n):
        parts = sum(inversion.inv_i_root(pi, i) for i in range(1, n + 1))
        t.check(pi.images, inversion.inv_root(pi), parts)


def _check_lemma5(t: _Tally, n: int) -> None:
    values: dict[int, set[int]] = {}
    for pi in enumerate_group(n):
        values.setdefault(pi.images[0], set()).add(inversion.inv_i_closed(pi, 1))
        t.cases += 1
    firsts = sorted(values)
    for a, b in itertools.combinations(firsts, 2):
        clash = values[a] & values[b]
        if clash:
            t.failures.append(((a, b), "disjoint inv_1 values", sorted(clash)))


def _check_lemma6(t: _Tally, n: int) -> None:
    image = set()
    for pi in enumerate_group(n):
        v = inversion.inv_i_root(pi, 1)
        t.check(("first-position", pi.images), v, inversion.first_inversion(pi))
        image.add(v)
    t.check("image", set(range(2 * n)), image)


def _check_recursion(t: _Tally, n: int) -> None:
    bn = 2**n * factorial(n)
    for pi in enumerate_group(n + 1):
        t.check(
            pi.images,
            coding.rank_hyperoctahedral(pi).value % bn,
            coding.rank_hyperoctahedral(coding.bar_reduction(pi)).value,
        )


def _check_digits(t: _Tally, n: int) -> None:
    hyp = hyperoctahedral()
    for pi in enumerate_group(n):
        msf = list(encode_integer(hyp, coding.rank_hyperoctahedral(pi).value).msf())
        msf = [0] * (n - len(msf)) + msf
        t.check(pi.images, inversion.inversion_vector(pi), msf)


def _named_systems() -> list[NumberSystem]:
    return [fixed(2), fixed(10), factorial_system(), hyperoctahedral()]


def _check_roundtrip(t: _Tally, n: int) -> None:
    rng = random.Random(20260)
    big = [rng.getrandbits(128) for _ in range(200)]
    for system in _named_systems():
        for a in itertools.chain(range(10**4 + 1), big):
            t.check((str(system), a), a, decode_integer(system, encode_integer(system, a)))


def _check_uniqueness(t: _Tally, n: int) -> None:
    sizes = {"fixed:2": 12, "fixed:10": 4, "factorial": 6, "hyperoctahedral": 5}
    for system in _named_systems():
        places = min(n, sizes[str(system)])
        bound = system.weight(places)
        hit = Counter()
        for digits in itertools.product(*(range(system.beta(i)) for i in range(places))):
            value = decode_integer(system, digits)
            hit[value] += 1
            t.check((str(system), digits), tuple(encode_integer(system, value)), _strip(digits))
        t.check((str(system), "range"), set(range(bound)), set(hit))
        t.check((str(system), "injective"), True, all(c == 1 for c in hit.values()))


def _strip(digits: tuple[int, ...]) -> tuple[int, ...]:
    ds = list(digits)
    while len(ds) > 1 and ds[-1] == 0:
        ds.pop()
    return tuple(ds) or (0,)


def _check_leading(t: _Tally, n: int) -> None:
    for system in _named_systems():
        for a in range(1, 5000):
            ds = encode_integer(system, a)
            top = len(ds) - 1
            w = system.weight(top)
            t.check((str(system), a), True, ds[top] * w <= a < (ds[top] + 1) * w)
        for k in range(1, 12):
            w = system.weight(k)
            t.check((str(system), "full", k), tuple(system.alphas_upto(k)), tuple(encode_integer(system, w - 1)))
            t.check((str(system), "carry", k), (0,) * k + (1,), tuple(encode_integer(system, w)))


def _check_telescoping(t: _Tally, n: int) -> None:
    for system in _named_systems():
        for m in range(n + 1):
            lhs = Fraction(system.alpha(m), system.weight(m + 1))
            rhs = Fraction(1, system.weight(m)) - Fraction(1, system.weight(m + 1))
            t.check((str(system), m), lhs, rhs)


def _check_dual(t: _Tally, n: int) -> None:
    for system in _named_systems():
        for m in range(1, n + 1):
            for k in range(1, 11):
                digits = rational.nonterminating_form(system, m, k)
                e = rational.parse_expansion(format_digits(1, [0], digits))
                gap = Fraction(1, system.weight(m)) - rational.value_of(system, e)
                t.check((str(system), m, k), Fraction(1, system.weight(m + k)), gap)


def _check_exactness(t: _Tally, n: int) -> None:
    for system in (factorial_system(), hyperoctahedral()):
        for q in range(2, n + 1):
            for p in range(1, q):
                r = Fraction(p, q)
                term = rational.is_terminating(system, r)
                if not term.terminating:
                    continue
                place = term.place
                t.check((str(system), r, "witness"), (0, True), (
                    system.weight(place) % r.denominator,
                    place == 0 or system.weight(place - 1) % r.denominator != 0,
                ))
                e = rational.expand_rational(system, r, place + 1)
                t.check((str(system), r, "status"), True, e.terminated)
                t.check((str(system), r, "value"), r, rational.value_of(system, e))
                bounded = all(0 <= d <= system.alpha(i) for i, d in enumerate(e.frac_digits))
                t.check((str(system), r, "bounds"), True, bounded)


def greedy_fraction(r: Fraction, weight: Callable[[int], int], alpha: Callable[[int], int], k: int) -> tuple[int, ...]:
    """First ``k`` fractional digits of ``r`` by largest-digit search.

    Digit ``i`` is the largest ``d <= alpha(i)`` keeping the partial sum
    (with place value ``1 / weight(i + 1)``) at or below the fractional part.
    """
    target = r - (r.numerator // r.denominator)
    partial = Fraction(0)
    out = []
    for i in range(k):
        place = Fraction(1, weight(i + 1))
        d = alpha(i)
        while partial + d * place > target:
            d -= 1
        partial += d * place
        out.append(d)
    return tuple(out)


def _check_examples(t: _Tally, n: int) -> None:
    fac, hyp = factorial_system(), hyperoctahedral()
    e = rational.expand_rational(hyp, Fraction(13, 16), 8)
    t.check("13/16", ("0.1:2:3", True), (str(e), e.terminated))
    e = rational.expand_rational(fac, Fraction(23, 24), 8)
    t.check("23/24", ((1, 2, 3), True), (e.frac_digits, e.terminated))
    for system, r, digits, printed in (
        (fac, Fraction(47, 30), 8, "1:1.0:1:3"),
        (hyp, Fraction(205, 69), 6, "2.0:1:4"),
    ):
        e = rational.expand_rational(system, r, digits)
        oracle = greedy_fraction(r, system.weight, system.alpha, len(e.frac_digits))
        t.check((str(r), "oracle"), oracle, e.frac_digits)
        t.check((str(r), "integer"), encode_integer(system, int(r)), e.integer_part)
        t.check((str(r), "printed form is an erratum"), True, str(e) != printed)
    e = rational.expand_decimal(fac, "2.718281828459045", 10)
    t.check("e", ("1:0", (1,) * 10), (format_digits(1, e.integer_part), e.frac_digits))
    e = rational.expand_decimal(hyp, "1.6487212707001282", 8)
    t.check("sqrt(e)", "1.1:1:1:1:1:1:1:1", str(e))


def _check_lehmer(t: _Tally, n: int) -> None:
    order = factorial(n)
    seen = set()
    for sigma in enumerate_symmetric(n):
        r = coding.rank_symmetric(sigma)
        seen.add(r.value)
        t.check(("roundtrip", sigma), list(sigma), coding.unrank_symmetric(r))
    t.check("image", set(range(order)), seen)
    for m in range(1, min(n, 6) + 1):
        for sigma in enumerate_symmetric(m):
            pairs = sum(1 for i, j in itertools.combinations(range(m), 2) if sigma[i] > sigma[j])
            t.check(("sum", sigma), pairs, sum(inversion.lehmer_code(sigma)))


def _check_group(t: _Tally, n: int) -> None:
    elements = list(enumerate_group(n))
    t.check("order", 2**n * factorial(n), len(set(elements)))
    e = identity(n)
    for pi in elements:
        t.check(("inverse", pi.images), e, compose(pi, inverse(pi)))
        t.check(("identity", pi.images), pi, compose(e, pi))
    rng = random.Random(7)
    for _ in range(500):
        a, b, c = (rng.choice(elements) for _ in range(3))
        t.check(("assoc", a.images, b.images, c.images), compose(compose(a, b), c), compose(a, compose(b, c)))


def _check_action(t: _Tally, n: int) -> None:
    roots = Counter(all_roots(n))
    for pi in enumerate_group(n):
        t.check(pi.images, roots, Counter(act_on_root(pi, v) for v in roots))


@dataclass(frozen=True)
class _Check:
    func: Callable[[_Tally, int], None]
    default_n: int
    describe: str


CHECKS: dict[str, _Check] = {
    "table1": _Check(_check_table1, 79, "integer table rows 0-79 against print and division"),
    "table2": _Check(_check_table2, 2, "B_2 inversion pairs and ranks 0..7"),
    "theorem8": _Check(_check_theorem8, 5, "rank is a bijection B_n -> 0..2^n n!-1"),
    "lemma4": _Check(_check_lemma4, 4, "closed-form inv_i equals root counting"),
    "decomposition": _Check(_check_decomposition, 4, "sum of inv_i equals inv"),
    "lemma5": _Check(_check_lemma5, 4, "different first images give different inv_1"),
    "lemma6": _Check(_check_lemma6, 5, "inv_1 takes exactly the values 0..2n-1"),
    "recursion": _Check(_check_recursion, 4, "rank mod B_n equals rank of the bar reduction"),
    "digits": _Check(_check_digits, 5, "rank digits read off the inversion vector"),
    "roundtrip": _Check(_check_roundtrip, 10**4, "decode(encode(a)) == a"),
    "uniqueness": _Check(_check_uniqueness, 12, "digit strings of length n hit 0..U_n-1 once"),
    "leading": _Check(_check_leading, 12, "leading-digit bounds and carries"),
    "telescoping": _Check(_check_telescoping, 20, "alpha_n/U_{n+1} = 1/U_n - 1/U_{n+1}"),
    "dual": _Check(_check_dual, 10, "nonterminating forms miss 1/U_n by 1/U_{n+k}"),
    "exactness": _Check(_check_exactness, 48, "terminating p/q expand and evaluate exactly"),
    "examples": _Check(_check_examples, 0, "worked fraction and real examples"),
    "lehmer": _Check(_check_lehmer, 7, "Lehmer rank bijection and inversion sums"),
    "group": _Check(_check_group, 4, "group order and axioms"),
    "action": _Check(_check_action, 4, "every element permutes the root system"),
}


def run_check(name: str, n: int | None = None) -> VerificationReport:
    try:
        check = CHECKS[name]
    except KeyError:
        raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECKS)}") from None
    size = check.default_n if n is None else n
    tally = _Tally()
    start = time.perf_counter()
    check.func(tally, size)
    elapsed = time.perf_counter() - start
    return VerificationReport(name, f"n={size}", tally.cases, tally.failures, elapsed)


def _parse_selector(selector: str) -> list[tuple[str, int | None]]:
    jobs = []
    for part in selector.split(","):
        words = part.split()
        if not words:
            continue
        name, n = words[0], None
        for word in words[1:]:
            key, _, value = word.partition("=")
            if key != "n" or not value.isdigit():
                raise UnknownCheck(f"bad selector term {word!r}")
            n = int(value)
        jobs.append((name, n))
    return jobs


def run_suite(selector: str | None = None, n: int | None = None) -> list[VerificationReport]:
    """Run checks named by ``selector``.

    ``selector`` is ``None``/``"all"`` or comma separated ``name [n=K]``
    terms such as ``"theorem8 n=4, table2"``; ``n`` overrides every size.
    """
    if selector is None or selector.strip() in ("", "all"):
        jobs = [(name, None) for name in CHECKS]
    else:
        jobs = _parse_selector(selector)
    return [run_check(name, n if n is not None else size) for name, size in jobs]
