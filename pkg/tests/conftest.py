import pytest
from hypothesis import strategies as st

from tower_schubert import Permutation, TowerDiagram, diagram_of_perm

MONK_PERM = Permutation([1, 2, 5, 6, 4, 10, 3, 8, 7, 11, 9])
MONK_DIAGRAM = TowerDiagram([0, 0, 4, 2, 0, 0, 2, 1, 2])
PIERI_PERM = Permutation([1, 2, 6, 4, 3, 7, 5])
FLIGHT_DIAGRAM = TowerDiagram([0, 5, 5, 1, 1, 0, 4, 2])


def perms(max_n: int = 7):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def words(max_len: int = 12, max_letter: int = 6):
    return st.lists(st.integers(1, max_letter), max_size=max_len).map(tuple)


def diagrams(max_n: int = 7):
    return perms(max_n).map(diagram_of_perm)


def heights(max_towers: int = 7, max_height: int = 4):
    return st.lists(st.integers(0, max_height), max_size=max_towers).map(tuple)


@pytest.fixture
def monk_diagram():
    return MONK_DIAGRAM


# one line per acceptance criterion, echoed after the run
ACCEPT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPT_LINES:
            terminalreporter.write_line(line)
