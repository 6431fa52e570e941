from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable

import pytest

# make the frozen oracle tables importable as ``baselines``
sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config: pytest.Config) -> None:
    config.stash[_ACCEPTANCE] = {}


@pytest.fixture
def acceptance(request: pytest.FixtureRequest) -> Callable[[int, str, bool, str], None]:
    """Record the outcome of one acceptance criterion for the summary."""
    results = request.config.stash[_ACCEPTANCE]

    def record(number: int, title: str, passed: bool, detail: str) -> None:
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
        results[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus: int, config: pytest.Config) -> None:
    results = config.stash.get(_ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
