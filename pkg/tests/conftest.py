from functools import lru_cache

import pytest

from altrank.oracle import build_graph

ORACLE_INSTANCES = [(2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (5, 2)]

# filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def cached_graph(n, q):
    return build_graph(n, q)


@pytest.fixture(scope="session")
def graph():
    return cached_graph


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
