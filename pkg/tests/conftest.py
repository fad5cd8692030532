import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from lowdegst.generators import complete, cycle, gen_random_2ec, hypercube, theta, wheel  # noqa: E402
from lowdegst.graph import Graph  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def two_edge_connected_corpus():
    """Named 2-edge-connected graphs, including multigraphs."""
    return {
        "double-edge": Graph(2, [(0, 1), (0, 1)]),
        "triple-edge": Graph(2, [(0, 1), (1, 0), (0, 1)]),
        "triangle": cycle(3),
        "c4": cycle(4),
        "c4-chord": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        "c7": cycle(7),
        "bowtie": Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        "k4": complete(4),
        "k6": complete(6),
        "wheel5": wheel(5),
        "wheel8": wheel(8),
        "q3": hypercube(3),
        "q4": hypercube(4),
        "theta-123": theta([1, 2, 3]),
        "theta-2222": theta([2, 2, 2, 2]),
        "petersen": Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
                               (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]),
        "two-triangles-doubled-bridge": Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (2, 3),
                                                  (3, 4), (4, 5), (5, 3)]),
        "parallel-cycle": Graph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0)]),
        "random-30": gen_random_2ec(30, 40, 11),
        "random-60-dense": gen_random_2ec(60, 300, 3),
    }


CORPUS = two_edge_connected_corpus()


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_graph(request):
    return CORPUS[request.param]


@st.composite
def random_2ec_graphs(draw, max_n=40):
    n = draw(st.integers(3, max_n))
    extra = draw(st.integers(0, 3 * n))
    seed = draw(st.integers(0, 2**64 - 1))
    return gen_random_2ec(n, extra, seed)


@st.composite
def small_multigraphs(draw, max_n=7, max_m=14):
    """Arbitrary loop-free multigraphs (connected or not, bridged or not)."""
    n = draw(st.integers(1, max_n))
    if n == 1:
        return Graph(1, [])
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Graph(n, draw(st.lists(pair, max_size=max_m)))


ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
