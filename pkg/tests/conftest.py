import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from blobsoergel.params import validate_params  # noqa: E402

GRID = ((5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (9, 2))


@pytest.fixture(params=GRID, ids=lambda lm: f"l{lm[0]}m{lm[1]}")
def grid_params(request):
    return validate_params(*request.param)


@pytest.fixture
def p52():
    return validate_params(5, 2)


@pytest.fixture
def p73():
    return validate_params(7, 3)


_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
