import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_c(\d+)_")
_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = _ACCEPTANCE.search(report.nodeid)
    if m is None:
        return
    key = int(m.group(1))
    if report.failed:
        _outcomes[key] = "FAIL"
    elif report.when == "call" and key not in _outcomes:
        _outcomes[key] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        terminalreporter.write_line(f"{_outcomes.get(key, 'NOT RUN'):7} criterion {key}: {CRITERIA[key]}")
