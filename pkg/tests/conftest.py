import pytest

from zdg.graphs import Graph
from zdg.enumeration import ClassifyOptions, classify_all


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# graphs transcribed from the bundled corpus, used across test modules
G319 = Graph.from_neighborhoods([[1, 2], [0, 3], [0, 3], [1, 2, 4, 5, 6], [3], [3], [3]])
G600 = Graph.from_neighborhoods([[3, 4, 5], [4, 5], [3], [0, 2, 4, 5],
                                 [0, 1, 3, 5, 6], [0, 1, 3, 4], [4]])

# the seven-vertex graph showing diameter <= 3 does not give the star condition
LEMMA_7V = Graph.from_neighborhoods([[1, 4, 6], [0, 2], [1, 3], [2, 5],
                                     [0, 5], [3, 4, 6], [0, 5]])

# the eleven-vertex graph whose core is fine but whose diameter exceeds 3
LEMMA_11V = Graph.from_neighborhoods([
    [1, 2], [0, 2, 3, 4], [0, 1, 5, 6], [1, 4, 7], [1, 3, 5, 8],
    [2, 4, 6, 8], [2, 5, 9], [3, 8, 10], [4, 5, 7, 9, 10], [6, 8, 10],
    [7, 8, 9]])

DGSW_SIX = {
    "G98": Graph.from_neighborhoods([[1, 3], [0, 2, 4], [1], [0, 4], [1, 3, 5], [4]]),
    "G145": Graph.from_neighborhoods([[1, 3], [0, 2, 4, 5], [1, 4], [0, 4],
                                      [1, 2, 3, 5], [1, 4]]),
    "G163": Graph.from_neighborhoods([[1, 5], [0, 2, 3, 5], [1, 3], [1, 2, 4, 5],
                                      [3, 5], [0, 1, 3, 4]]),
    "G181": Graph.from_neighborhoods([[1, 5], [0, 2, 4, 5], [1, 3, 4, 5], [2, 4],
                                      [1, 2, 3, 5], [0, 1, 2, 4]]),
}


@pytest.fixture(scope="session")
def n6_records():
    return classify_all(6, ClassifyOptions())


@pytest.fixture(scope="session")
def n6_records_nopatterns():
    return classify_all(6, ClassifyOptions(use_patterns=False, use_duplication=False))


@pytest.fixture(scope="session")
def n7_records():
    return classify_all(7, ClassifyOptions(), jobs=2)
