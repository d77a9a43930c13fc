import numpy as np
import pytest

from varnash import BimatrixGame, ZeroSumGame

# row player = company X, column player = company Y; strategies (Do, Don't)
RND_A = [[50, 100], [-50, 0]]
RND_B = [[50, 100], [-50, 0]]
PENNIES = [[1, -1], [-1, 1]]

ACCEPTANCE_LINES = []


@pytest.fixture
def rnd():
    return BimatrixGame(RND_A, RND_B)


@pytest.fixture
def pennies():
    return ZeroSumGame(PENNIES)


@pytest.fixture
def pennies_bimatrix():
    return ZeroSumGame(PENNIES).to_bimatrix()


@pytest.fixture
def diag():
    return ZeroSumGame([[2, 0], [0, 1]])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
