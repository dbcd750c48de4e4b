import pytest

from logconcave.series import RowCache, power_row

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    print(line)
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def p1():
    return power_row(1, 200)


@pytest.fixture
def fresh_cache():
    return RowCache()
