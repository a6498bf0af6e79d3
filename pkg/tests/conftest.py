from __future__ import annotations

import pytest

from parry.exactnum import isolate_roots_above_one, quadratic_family_field


@pytest.fixture(scope="session")
def golden():
    return quadratic_family_field(1, 1).gen


@pytest.fixture(scope="session")
def golden_sq():
    """(3 + sqrt 5) / 2 in its own field."""
    return isolate_roots_above_one([1, -3, 1])[-1].gen


@pytest.fixture(scope="session")
def silver():
    """1 + sqrt 2."""
    return quadratic_family_field(1, 2).gen


@pytest.fixture(scope="session")
def plastic():
    return isolate_roots_above_one([-1, -1, 0, 1])[0].gen


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
