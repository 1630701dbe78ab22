import random

import pytest

from segtract import Sequence, TableScoring

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def two_unit_instance():
    """N=2 with F(1,1)=F(2,2)=5 and F(1,2)=1."""
    s = Sequence([0, 0])
    f = TableScoring({(1, 1): 5, (2, 2): 5, (1, 2): 1})
    return s, f
