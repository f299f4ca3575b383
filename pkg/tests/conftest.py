import pathlib

import pytest

from cubemedian.medgraph import ExplicitGraph
from cubemedian.racg import DefiningGraph

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def tree3():
    """Free product of three involutions: its Cayley graph is the
    trivalent tree."""
    return DefiningGraph("abc")


@pytest.fixture(scope="session")
def c5():
    """Right-angled pentagon group: hyperbolic, genuinely 2-dimensional."""
    return DefiningGraph(
        "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
    )


@pytest.fixture(scope="session")
def square():
    """Z/2 x Z/2: one commuting pair, four elements in total."""
    return DefiningGraph("ab", [("a", "b")])


@pytest.fixture(scope="session")
def c4_graph():
    return ExplicitGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture(scope="session")
def c5_graph():
    return ExplicitGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture(scope="session")
def q3_graph():
    return ExplicitGraph(
        8,
        [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7),
         (4, 5), (4, 6), (5, 7), (6, 7)],
    )


@pytest.fixture(scope="session")
def p3_graph():
    return ExplicitGraph(3, [(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def data_dir():
    return DATA
