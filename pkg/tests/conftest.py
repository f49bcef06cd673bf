from __future__ import annotations

import re

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_")
_results: dict = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    ac = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        prev = _results.get(ac, "PASS")
        _results[ac] = "FAIL" if report.outcome == "failed" or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for ac in sorted(_results):
        terminalreporter.write_line(f"AC{ac}: {_results[ac]}")
