import pytest

from richclub import Graph


def graph_from(n, edges):
    """Graph on nodes labeled '0'..'n-1' with the given index edges."""
    return Graph([str(i) for i in range(n)], edges)


@pytest.fixture
def star5():
    """Hub 0 with leaves 1..4; degrees [4,1,1,1,1]."""
    return graph_from(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def k4():
    return graph_from(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.fixture
def path3():
    """a-b-c as indices 0-1-2."""
    return Graph(["a", "b", "c"], [(0, 1), (1, 2)])


@pytest.fixture
def cycle4():
    return graph_from(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
