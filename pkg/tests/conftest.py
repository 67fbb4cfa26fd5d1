import pytest

from crispwta.data import load_example

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def example():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_example(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
