import pytest

from nilorbits.chevalley import build_algebra
from nilorbits.pipeline import enumerate_algebra

_ENUMS = {}


def enumeration(kind: str, seed: int = 0):
    """Enumeration shared across test modules (E7/E8 take a minute or more)."""
    key = (kind, seed)
    if key not in _ENUMS:
        _ENUMS[key] = enumerate_algebra(kind, seed)
    return _ENUMS[key]


@pytest.fixture(scope="session")
def g2():
    return build_algebra("G2")


@pytest.fixture(scope="session")
def f4():
    return build_algebra("F4")


@pytest.fixture(scope="session")
def e6():
    return build_algebra("E6")


@pytest.fixture(scope="session")
def e8():
    return build_algebra("E8")


ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, passed: bool, detail: str) -> None:
    """Record one acceptance line; printed again in the terminal summary."""
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
