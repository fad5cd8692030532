import random

import pytest
from hypothesis import given, settings

from brute import bridges_by_removal, two_edge_connected_brute
from conftest import CORPUS, random_2ec_graphs, small_multigraphs
from lowdegst.builder import SpanningTree, low_degree_spanning_tree
from lowdegst.edge_dfs import EdgeDfsList, compute_edge_dfs
from lowdegst.generators import complete, cycle, wheel
from lowdegst.graph import Graph
from lowdegst.verify import (
    InvalidTree,
    check_degree_bound,
    check_partition_cut,
    find_bridges,
    is_two_edge_connected,
    orientation_stats,
    orientation_strongly_connected,
    two_edge_connectivity_failure,
    validate_spanning_tree,
)

TWO_TRIANGLES_BRIDGED = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])


@pytest.mark.parametrize("g, expected", [
    (cycle(4), []),
    (Graph(3, [(0, 1), (1, 2)]), [0, 1]),
    (TWO_TRIANGLES_BRIDGED, [3]),
    (Graph(2, [(0, 1), (0, 1)]), []),
    (Graph(2, [(0, 1)]), [0]),
    (Graph(4, [(0, 1), (2, 3)]), [0, 1]),
])
def test_bridges_examples(g, expected):
    assert find_bridges(g) == expected
    assert bridges_by_removal(g) == expected


@given(small_multigraphs())
@settings(max_examples=300)
def test_bridges_match_removal_brute_force(g):
    assert find_bridges(g) == bridges_by_removal(g)
    assert is_two_edge_connected(g) == two_edge_connected_brute(g)


@pytest.mark.parametrize("g, expected", [
    (Graph(2, [(0, 1), (0, 1)]), True),
    (Graph(4, [(0, 1), (1, 2), (1, 3)]), False),
    (wheel(5), True),
    (Graph(1), False),
    (Graph(0), False),
    (Graph(4, [(0, 1), (1, 0), (2, 3), (3, 2)]), False),
])
def test_two_edge_connected(g, expected):
    assert is_two_edge_connected(g) is expected
    assert two_edge_connected_brute(g) is expected


def test_failure_messages():
    assert "bridge" in str(two_edge_connectivity_failure(TWO_TRIANGLES_BRIDGED))
    assert "{2,3}" in str(two_edge_connectivity_failure(TWO_TRIANGLES_BRIDGED))
    assert "disconnected" in str(two_edge_connectivity_failure(Graph(4, [(0, 1), (1, 0)])))


@pytest.mark.parametrize("g, X, count", [
    (cycle(4), {0}, 2),
    (cycle(4), {0, 1}, 2),
    (complete(4), {0, 1}, 4),
    (complete(5), {0, 1}, 6),
])
def test_partition_cut(g, X, count):
    assert check_partition_cut(g, X) == count
    assert count == sum((u in X) != (v in X) for u, v in g.edges)


@pytest.mark.parametrize("X", [set(), {0, 1, 2, 3}, {7}])
def test_partition_cut_invalid(X):
    with pytest.raises(ValueError):
        check_partition_cut(cycle(4), X)


def test_partition_cut_at_least_two_on_corpus(corpus_graph):
    g = corpus_graph
    rng = random.Random(g.n * 1000 + g.m)
    for _ in range(200):
        k = rng.randint(1, g.n - 1)
        X = rng.sample(range(g.n), k)
        assert check_partition_cut(g, X) >= 2


@pytest.mark.parametrize("g, edges, ok, fragment", [
    (cycle(3), [1, 2], True, ""),
    (cycle(3), [0, 1, 2], False, "cycle"),
    (cycle(4), [0, 2], False, "disconnected"),
    (cycle(4), [0, 1], False, "disconnected"),
    (cycle(4), [0, 0, 1], False, "repeated"),
    (cycle(4), [0, 1, 9], False, "invalid"),
])
def test_validate_spanning_tree(g, edges, ok, fragment):
    check = validate_spanning_tree(g, SpanningTree.from_edges(g, edges))
    assert bool(check) is ok
    assert fragment in check.reason


def test_validate_detects_bad_degree_table():
    t = SpanningTree.from_edges(cycle(3), [1, 2])
    t.deg[0] = 5
    assert "degree" in validate_spanning_tree(cycle(3), t).reason


@pytest.mark.parametrize("L, ins, outs", [
    ([(0, 1, 0), (1, 2, 1), (2, 0, 2)], [1, 1, 1], [1, 1, 1]),
])
def test_orientation_triangle(L, ins, outs):
    stats = orientation_stats(cycle(3), EdgeDfsList.from_items(L))
    assert stats.in_count == ins and stats.out_count == outs
    assert stats.all_balanced


def test_orientation_parallel():
    g = Graph(2, [(0, 1), (0, 1)])
    stats = orientation_stats(g, EdgeDfsList.from_items([(0, 1, 0), (1, 0, 1)]))
    assert stats.in_count == [1, 1] and stats.out_count == [1, 1]
    assert stats.balanced_ok == [True, True]


def test_orientation_rejects_invalid_list():
    with pytest.raises(ValueError):
        orientation_stats(cycle(3), EdgeDfsList.from_items([(0, 1, 0)]))


def test_balance_flag_uses_parity():
    g = Graph(2, [(0, 1), (0, 1), (0, 1)])  # odd degree 3
    from lowdegst.verify import OrientationStats
    assert OrientationStats([2], [1], [3]).balanced_ok == [True]
    assert OrientationStats([2], [1], [2]).balanced_ok == [False]
    assert OrientationStats([3], [1], [4]).balanced_ok == [False]
    assert orientation_stats(g, compute_edge_dfs(g, 0)).all_balanced


def test_wheel_orientation_balanced():
    g = wheel(5)
    for s in range(g.n):
        assert orientation_stats(g, compute_edge_dfs(g, s)).all_balanced


@given(random_2ec_graphs(max_n=100))
def test_balance_and_totals(g):
    stats = orientation_stats(g, compute_edge_dfs(g, 0))
    assert stats.all_balanced
    assert sum(stats.in_count) == sum(stats.out_count) == g.m
    assert [i + o for i, o in zip(stats.in_count, stats.out_count)] == g.degrees


def test_degree_report_examples():
    report = check_degree_bound(cycle(5), low_degree_spanning_tree(cycle(5))[0])
    assert report.ok and report.worst_slack == 0
    assert all(r.slack == 0 for r in report.rows if r.deg_t == 2)

    star = SpanningTree.from_edges(complete(4), [0, 1, 2])  # edges 0-1, 0-2, 0-3
    report = check_degree_bound(complete(4), star)
    assert report.rows[0].deg_t == 3 and report.rows[0].bound == 3 and report.ok

    hub = SpanningTree.from_edges(wheel(5), [0, 1, 2, 3, 4])
    report = check_degree_bound(wheel(5), hub)
    assert report.rows[0].deg_t == 5 and report.rows[0].bound == 4
    assert not report.ok and report.worst_slack == -1


def test_degree_report_csv():
    report = check_degree_bound(cycle(3), SpanningTree.from_edges(cycle(3), [1, 2]))
    assert report.to_csv() == "v,deg_g,deg_t,bound,slack\n0,2,1,2,1\n1,2,1,2,1\n2,2,2,2,0\n"


def test_degree_report_rejects_invalid_tree():
    with pytest.raises(InvalidTree):
        check_degree_bound(cycle(3), SpanningTree.from_edges(cycle(3), [0, 1, 2]))


def test_orientation_strongly_connected_on_corpus(corpus_graph):
    # observed property, not a guarantee the algorithm relies on
    g = corpus_graph
    for s in range(min(g.n, 5)):
        assert orientation_strongly_connected(g, compute_edge_dfs(g, s))


def test_orientation_not_strongly_connected_detected():
    g = cycle(3)
    L = EdgeDfsList.from_items([(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert not orientation_strongly_connected(g, L)
