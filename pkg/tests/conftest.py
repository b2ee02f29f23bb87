import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dappled import ConditionSet, Tiling  # noqa: E402
from cases import EXAMPLE_IN  # noqa: E402


@pytest.fixture
def h2v2():
    return ConditionSet.of((0, "H", 2), (1, "V", 2))


@pytest.fixture
def example_in():
    return Tiling.from_rows(EXAMPLE_IN)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])
