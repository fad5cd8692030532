import pytest
from hypothesis import given, settings

from brute import all_spanning_trees_combinations, det_fraction, two_edge_connected_brute
from conftest import CORPUS, small_multigraphs
from lowdegst.generators import complete, cycle, hypercube, wheel
from lowdegst.graph import Graph
from lowdegst.oracle import (
    OracleFailure,
    TooLarge,
    count_spanning_trees,
    enumerate_spanning_trees,
    exhaustive_small_sweep,
    oracle_check,
    simple_graphs,
    tree_edge_sets,
)
from lowdegst.verify import validate_spanning_tree


def laplacian_minor(g):
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return [row[:-1] for row in L[:-1]]


@pytest.mark.parametrize("g, count", [
    (cycle(3), 3),
    (cycle(4), 4),
    (complete(4), 16),
    (Graph(2, [(0, 1), (0, 1)]), 2),
    (complete(6), 6 ** 4),  # Cayley
    (hypercube(3), 384),
])
def test_counts(g, count):
    assert count_spanning_trees(g) == count
    assert det_fraction(laplacian_minor(g)) == count


def test_enumeration_sizes():
    assert len(list(enumerate_spanning_trees(cycle(3)))) == 3
    assert len(list(enumerate_spanning_trees(cycle(4)))) == 4
    assert len(list(enumerate_spanning_trees(complete(4)))) == 16


@given(small_multigraphs(max_n=6, max_m=10))
@settings(max_examples=150)
def test_enumeration_matches_combinations_and_kirchhoff(g):
    sets = list(tree_edge_sets(g))
    assert len(sets) == len(set(sets))
    assert sorted(sets) == sorted(all_spanning_trees_combinations(g))
    assert count_spanning_trees(g) == len(sets)


def test_enumerated_trees_are_valid():
    small = [g for g in CORPUS.values() if g.n <= 12 and count_spanning_trees(g) <= 5000]
    assert len(small) >= 10
    for g in small:
        trees = list(enumerate_spanning_trees(g))
        assert len(trees) == count_spanning_trees(g)
        assert all(validate_spanning_tree(g, t) for t in trees)


def test_limits():
    with pytest.raises(TooLarge):
        list(tree_edge_sets(cycle(13)))
    with pytest.raises(TooLarge):
        list(tree_edge_sets(complete(12)))
    with pytest.raises(TooLarge):
        count_spanning_trees(cycle(65))


def test_verdicts():
    v = oracle_check(cycle(5))
    assert v.theorem_holds and v.best_worst_slack == 0 and v.trees_enumerated == 5
    v = oracle_check(wheel(5))
    assert v.theorem_holds and v.algorithm_worst_slack >= 0
    v = oracle_check(complete(4))
    assert v.theorem_holds and v.trees_enumerated == 16
    assert v.csv().endswith(",1")


def test_verdict_on_bridged_graph():
    v = oracle_check(Graph(3, [(0, 1), (1, 2)]))
    assert not v.two_edge_connected and v.algorithm_worst_slack is None
    assert v.trees_enumerated == 1
    assert v.csv().split(",")[3] == ""


def test_oracle_on_multigraph_corpus():
    for name in ("double-edge", "triple-edge", "parallel-cycle", "two-triangles-doubled-bridge"):
        for s in range(CORPUS[name].n):
            assert oracle_check(CORPUS[name], s).theorem_holds


@pytest.mark.parametrize("n", range(3, 9))
def test_cycles_are_tight(n):
    for edge_set in tree_edge_sets(cycle(n)):
        deg = [0] * n
        for e in edge_set:
            for x in cycle(n).edges[e]:
                deg[x] += 1
        assert min(2 - d for d in deg) == 0


def test_sweep_counts_match_brute_filter():
    expected = {}
    for n in range(1, 6):
        expected[n] = sum(two_edge_connected_brute(g) for g in simple_graphs(n))
    # labelled 2-edge-connected graphs on 3, 4, 5 vertices
    assert [expected[n] for n in (3, 4, 5)] == [1, 10, 253]
    s = exhaustive_small_sweep(5)
    assert s.graphs_by_n == expected
    assert s.failures == 0
    assert s.runs == sum(n * c for n, c in expected.items())


@pytest.mark.parametrize("max_n, graphs", [(2, 0), (3, 1), (4, 11)])
def test_sweep_small(max_n, graphs):
    assert exhaustive_small_sweep(max_n).graphs == graphs


def test_sweep_rejects_large():
    with pytest.raises(ValueError):
        exhaustive_small_sweep(7)


def test_sweep_reports_offending_graph(monkeypatch):
    import lowdegst.oracle as oracle_mod

    monkeypatch.setattr(oracle_mod, "check_degree_bound", lambda g, t: type("R", (), {"ok": False})())
    with pytest.raises(OracleFailure, match="p 3 3"):
        exhaustive_small_sweep(3)


@pytest.mark.slow
def test_sweep_six_vertices():
    s = exhaustive_small_sweep(6)
    assert s.graphs_by_n[6] == 11968
    assert s.runs == 3 + 4 * 10 + 5 * 253 + 6 * 11968
