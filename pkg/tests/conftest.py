import json
from pathlib import Path

import pytest

from selfdea.cli import load_demo

GOLDEN = json.loads((Path(__file__).parent / "golden" / "paper_tables.json").read_text())

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def golden():
    return GOLDEN


@pytest.fixture
def table31():
    return load_demo("table3.1")


@pytest.fixture
def table32():
    return load_demo("table3.2")


@pytest.fixture(scope="session")
def table34():
    return load_demo("table3.4")


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""

    def _report(label: str, passed: bool, detail: str = "") -> bool:
        _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
