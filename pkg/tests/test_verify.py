from fractions import Fraction
from math import factorial

import pytest

from radixcode import verify
from radixcode.errors import CapExceeded, UnknownCheck
from radixcode.signed_perm import SignedPermutation


def test_enumerate_group_sizes():
    assert len(list(verify.enumerate_group(1))) == 2
    assert len(list(verify.enumerate_group(3))) == 48


def test_enumerate_b2_is_table2():
    assert set(verify.enumerate_group(2)) == {SignedPermutation(w) for w, _ in verify.TABLE2}


def test_enumeration_order_is_deterministic():
    first = list(verify.enumerate_group(3))
    assert first == list(verify.enumerate_group(3))
    assert first[0].images == (1, 2, 3)
    assert first[1].images == (1, 2, -3)


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        next(verify.enumerate_group(8))
    with pytest.raises(CapExceeded):
        next(verify.enumerate_group(3, cap=2))
    monkeypatch.setenv("RADIXCODE_MAX_N", "2")
    with pytest.raises(CapExceeded):
        next(verify.enumerate_group(3))
    with pytest.raises(CapExceeded):
        verify.enumerate_symmetric(3)
    monkeypatch.setenv("RADIXCODE_MAX_N", "many")
    with pytest.raises(ValueError):
        verify.max_n()


def test_golden_table_has_80_rows():
    golden = verify.load_table1_golden()
    assert sorted(golden) == list(range(80))
    assert golden[79] == ("3201", "1331", True)
    assert golden[24] == ("1000", "300", False)


def test_reproduce_table1_rows():
    rows = {row.integer: row for row in verify.reproduce_table1(0, 79)}
    assert (rows[24].factorial, rows[24].hyperoctahedral) == ("1000", "300")
    assert (rows[0].factorial, rows[0].hyperoctahedral) == ("0", "0")
    assert (rows[60].factorial, rows[60].hyperoctahedral) == ("2200", "1120")
    assert rows[60].factorial_erratum and rows[60].printed_factorial == "2300"
    assert not rows[59].factorial_erratum
    assert all(verify.matches_arithmetic(r) for r in rows.values())


def test_reproduce_table1_beyond_golden():
    (row,) = verify.reproduce_table1(100, 100)
    assert row.printed_factorial is None and row.matches_printed
    with pytest.raises(ValueError):
        verify.reproduce_table1(5, 4)


def test_greedy_oracles():
    assert verify.greedy_digits(79, lambda i: 2**i * factorial(i)) == (1, 3, 3, 1)
    digits = verify.greedy_fraction(Fraction(13, 16), lambda i: 2**i * factorial(i), lambda i: 2 * i + 1, 4)
    assert digits == (1, 2, 3, 0)


@pytest.mark.parametrize(
    "selector, cases",
    [("theorem8 n=4", 384), ("lemma4 n=3", 48 * 3), ("table2", 8)],
)
def test_run_suite_examples(selector, cases):
    (report,) = verify.run_suite(selector)
    assert report.passed
    assert report.cases == cases


def test_run_suite_multiple_and_override():
    reports = verify.run_suite("lemma6, decomposition", n=3)
    assert [r.name for r in reports] == ["lemma6", "decomposition"]
    assert all(r.params == "n=3" and r.passed for r in reports)


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        verify.run_suite("nonsense")
    with pytest.raises(UnknownCheck):
        verify.run_suite("theorem8 m=3")


def test_report_flags_failures():
    report = verify.VerificationReport("x", "n=1", cases=1, failures=[(1, 2, 3)])
    assert not report.passed
    assert "FAIL" in str(report)
    assert report.as_dict()["passed"] is False


def test_full_suite_is_deterministic_and_green():
    first = verify.run_suite()
    second = verify.run_suite()
    assert [r.name for r in first] == list(verify.CHECKS)
    assert all(r.passed for r in first)
    assert [(r.name, r.cases, r.failures) for r in first] == [
        (r.name, r.cases, r.failures) for r in second
    ]
