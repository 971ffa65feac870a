import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bikeikit import catalog  # noqa: E402
from bikeikit.diagram import parse  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def X1():
    return catalog.bikei("x1")


@pytest.fixture(scope="session")
def X2():
    return catalog.bikei("x2")


@pytest.fixture(scope="session")
def XP():
    return catalog.bikei("xp")


@pytest.fixture(scope="session")
def X8():
    return catalog.bikei("x8")


@pytest.fixture(scope="session")
def M1():
    return catalog.module("ex-proper")


@pytest.fixture(scope="session")
def M2():
    return catalog.module("second")


@pytest.fixture(scope="session")
def M5():
    return catalog.module("z5")


@pytest.fixture(scope="session")
def P2():
    return parse("X(1,2,3,4) M13(1,3,4,2)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
