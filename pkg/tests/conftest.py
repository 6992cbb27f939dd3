"""Collect the acceptance-criterion outcomes and print one line per criterion."""
import re

import pytest

_RESULTS = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        _RESULTS[n] = _RESULTS.get(n, True) and not failed


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status = {True: "PASS", False: "FAIL"}.get(_RESULTS.get(n), "NOT RUN")
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {CRITERIA[n]}")
