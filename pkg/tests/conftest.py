"""Shared fixtures plus the acceptance-criteria summary block.

Acceptance tests report through ``record_criterion`` so that one PASS/FAIL
line per criterion is printed in the terminal summary even under default
output capturing.
"""

import pytest

_CRITERION_LINES: dict[int, str] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    _CRITERION_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"


@pytest.fixture(autouse=True)
def _no_ambient_seed(monkeypatch):
    # Keep every test hermetic with respect to the seed override.
    monkeypatch.delenv("SENDOV_LAB_SEED", raising=False)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_LINES):
        terminalreporter.write_line(_CRITERION_LINES[number])
