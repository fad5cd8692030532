"""Brute-force ground truth for small graphs: spanning-tree enumeration,
Kirchhoff counts, and an exhaustive sweep over all small simple graphs."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .builder import SpanningTree, build_spanning_tree, low_degree_spanning_tree
from .edge_dfs import compute_edge_dfs, validate_edge_dfs
from .graph import Graph, ceiling_bound, serialize_graph
from .verify import (
    check_degree_bound,
    is_two_edge_connected,
    orientation_stats,
    validate_spanning_tree,
)

MAX_ENUM_VERTICES = 12
MAX_ENUM_TREES = 10**7
MAX_COUNT_VERTICES = 64

VERDICT_HEADER = "graph_hash,trees,best_worst_slack,alg_worst_slack,theorem_holds"


class TooLarge(ValueError):
    pass


class OracleFailure(AssertionError):
    """A checked claim failed; the message carries the offending graph."""


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:16]


def count_spanning_trees(g: Graph) -> int:
    """Kirchhoff count: determinant of the Laplacian with the last row and column
    removed, by fraction-free (Bareiss) elimination in exact integers."""
    n = g.n
    if n > MAX_COUNT_VERTICES:
        raise TooLarge(f"n={n} exceeds {MAX_COUNT_VERTICES}")
    if n == 0:
        return 0
    if n == 1:
        return 1
    k = n - 1
    a = [[0] * k for _ in range(k)]
    for u, v in g.edges:
        for x in (u, v):
            if x < k:
                a[x][x] += 1
        if u < k and v < k:
            a[u][v] -= 1
            a[v][u] -= 1
    sign = 1
    prev = 1
    for i in range(k):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def tree_edge_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every spanning tree as an ascending tuple of edge ids, each exactly once.

    Backtracks over the edges in id order, keeping an edge only if it joins two
    components (union-find with undo).
    """
    n, m = g.n, g.m
    if n > MAX_ENUM_VERTICES:
        raise TooLarge(f"n={n} exceeds {MAX_ENUM_VERTICES}")
    total = count_spanning_trees(g)
    if total > MAX_ENUM_TREES:
        raise TooLarge(f"{total} spanning trees exceed the enumeration limit")
    if total == 0:
        return
    if n == 1:
        yield ()
        return
    edges = g.edges
    parent = list(range(n))
    size = [1] * n
    chosen: list[int] = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] > size[rv]:
                ru, rv = rv, ru
            parent[ru] = rv
            size[rv] += size[ru]
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            size[rv] -= size[ru]
            parent[ru] = ru
        yield from rec(i + 1)

    yield from rec(0)


def enumerate_spanning_trees(g: Graph, root: int = 0) -> Iterator[SpanningTree]:
    for edge_set in tree_edge_sets(g):
        yield SpanningTree.from_edges(g, edge_set, root)


def worst_slack(g: Graph, edge_set) -> int:
    deg = [0] * g.n
    for e in edge_set:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return min(ceiling_bound(dg) - dt for dg, dt in zip(g.degrees, deg))


@dataclass(frozen=True)
class OracleVerdict:
    graph_id: str
    trees_enumerated: int
    best_worst_slack: int | None  # None when the graph has no spanning tree
    algorithm_worst_slack: int | None  # None when the algorithm was not run
    theorem_holds: bool
    two_edge_connected: bool

    def csv(self) -> str:
        def fmt(x):
            return "" if x is None else str(x)

        return (f"{self.graph_id},{self.trees_enumerated},{fmt(self.best_worst_slack)},"
                f"{fmt(self.algorithm_worst_slack)},{int(self.theorem_holds)}")


def oracle_check(g: Graph, start: int = 0) -> OracleVerdict:
    """Enumerate all spanning trees of ``g`` and compare with the algorithm.

    On 2-edge-connected input raises :class:`OracleFailure` unless some tree
    meets every bound, and the algorithm's tree is one of the enumerated trees
    and meets every bound too.
    """
    trees = 0
    best = None
    found = set()
    for edge_set in tree_edge_sets(g):
        trees += 1
        s = worst_slack(g, edge_set)
        if best is None or s > best:
            best = s
        found.add(edge_set)
    holds = best is not None and best >= 0
    two_ec = is_two_edge_connected(g)
    alg = None
    if two_ec:
        tree, report = low_degree_spanning_tree(g, start)
        alg = report.worst_slack
        if not holds:
            raise OracleFailure(f"no spanning tree meets the bound:\n{serialize_graph(g)}")
        if alg < 0:
            raise OracleFailure(f"algorithm tree violates the bound:\n{serialize_graph(g)}")
        if tuple(sorted(tree.edges.tolist())) not in found:
            raise OracleFailure(f"algorithm tree not among enumerated trees:\n{serialize_graph(g)}")
    return OracleVerdict(graph_hash(g), trees, best, alg, holds, two_ec)


def simple_graphs(n: int) -> Iterator[Graph]:
    """All labelled simple graphs on ``n`` vertices; bit ``k`` of the mask selects
    the ``k``-th pair in lexicographic order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@dataclass
class SweepSummary:
    max_n: int
    graphs_by_n: dict[int, int] = field(default_factory=dict)  # 2-edge-connected graphs per n
    runs: int = 0  # (graph, start vertex) pairs checked
    failures: int = 0
    verdicts: list[OracleVerdict] = field(default_factory=list)

    @property
    def graphs(self) -> int:
        return sum(self.graphs_by_n.values())


def _fail(msg: str, g: Graph, start: int):
    raise OracleFailure(f"{msg} (start={start}):\n{serialize_graph(g)}")


def check_all_starts(g: Graph, tree_sets: set | None = None) -> int:
    """Run every per-start check on ``g``; returns the number of starts checked."""
    for s in range(g.n):
        L = compute_edge_dfs(g, s)
        bad = validate_edge_dfs(g, L)
        if bad is not None:
            _fail(f"edge DFS invalid: {bad}", g, s)
        stats = orientation_stats(g, L, validate=False)
        if not stats.all_balanced:
            _fail("in/out balance violated", g, s)
        tree, trace = build_spanning_tree(g, L, s, checked=True)
        check = validate_spanning_tree(g, tree)
        if not check:
            _fail(f"not a spanning tree: {check.reason}", g, s)
        report = check_degree_bound(g, tree)
        if not report.ok:
            _fail("degree bound violated", g, s)
        for u in range(g.n):
            if not tree.deg[u] <= stats.in_count[u] + 1 <= ceiling_bound(g.degrees[u]):
                _fail(f"in-count chain broken at vertex {u}", g, s)
        if tree_sets is not None and tuple(sorted(tree.edges.tolist())) not in tree_sets:
            _fail("tree not among enumerated trees", g, s)
    return g.n


def exhaustive_small_sweep(max_n: int, keep_verdicts: bool = False) -> SweepSummary:
    """Check every 2-edge-connected simple graph on at most ``max_n`` vertices,
    from every start vertex, against the enumeration oracle."""
    if not 0 <= max_n <= 6:
        raise ValueError("max_n must be between 0 and 6")
    summary = SweepSummary(max_n)
    for n in range(1, max_n + 1):
        count = 0
        for g in simple_graphs(n):
            if not is_two_edge_connected(g):
                continue
            count += 1
            tree_sets = set()
            best = None
            for edge_set in tree_edge_sets(g):
                tree_sets.add(edge_set)
                s = worst_slack(g, edge_set)
                best = s if best is None else max(best, s)
            if best is None or best < 0:
                raise OracleFailure(f"no spanning tree meets the bound:\n{serialize_graph(g)}")
            summary.runs += check_all_starts(g, tree_sets)
            if keep_verdicts:
                _, report = low_degree_spanning_tree(g, 0)
                summary.verdicts.append(OracleVerdict(
                    graph_hash(g), len(tree_sets), best, report.worst_slack, True, True))
        summary.graphs_by_n[n] = count
    return summary
