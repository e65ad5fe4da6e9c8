import pytest

from twoclass.arith import primes_up_to

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    def record(line: str) -> None:
        print(line)
        _ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_primes():
    return primes_up_to(2000)


def squares_mod(p):
    return {x * x % p for x in range(1, p)}
