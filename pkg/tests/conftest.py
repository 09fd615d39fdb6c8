"""Shared pytest wiring for the suite.

The acceptance tests record one status line per criterion; pytest's
capture would otherwise swallow those lines on passing runs, so they
are replayed in a terminal summary section at the end.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
