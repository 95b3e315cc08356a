import random

import pytest

from ihara.graph import bouquet, complete_graph, cycle_graph, graph, path_graph, random_multigraph, star_graph

CORPUS_SEEDS = range(100)


def corpus():
    """The seeded random multigraphs used across the suite (<= 5 vertices, <= 8 edges)."""
    return [random_multigraph(random.Random(s), max_vertices=5, max_edges=8) for s in CORPUS_SEEDS]


NAMED = {
    "path2": lambda: path_graph(2),
    "triangle": lambda: complete_graph(3),
    "k4": lambda: complete_graph(4),
    "loop": lambda: bouquet(1),
    "bouquet2": lambda: bouquet(2),
    "square": lambda: cycle_graph(4),
    "double_edge": lambda: graph(2, [(0, 1), (0, 1)]),
    "theta": lambda: graph(2, [(0, 1), (0, 1), (0, 1)]),
    "lollipop": lambda: graph(3, [(0, 1), (1, 2), (2, 2)]),
    "star5": lambda: star_graph(5),
}


@pytest.fixture(params=sorted(NAMED))
def named_graph(request):
    return NAMED[request.param]()


@pytest.fixture(scope="session")
def random_corpus():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
