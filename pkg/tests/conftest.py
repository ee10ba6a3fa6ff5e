import pytest

from mixmult import GradedRing, MonomialIdeal, MonomialModule

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def plane():
    return GradedRing.standard_graded(2)


@pytest.fixture
def space():
    return GradedRing.standard_graded(3)


@pytest.fixture
def bigraded():
    """k[x1, x2, y1, y2] with deg x_i = (1, 0), deg y_j = (0, 1)."""
    return GradedRing.multigraded([2, 2])


def ideal(ring, *gens):
    return MonomialIdeal(ring, tuple(tuple(g) for g in gens))


def quotient(ring, *gens):
    return MonomialModule.quotient(ideal(ring, *gens))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
