"""Independent certification: bridges, cuts, tree validity, orientation balance
and the per-vertex degree budget."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .builder import SpanningTree
from .edge_dfs import EdgeDfsList, validate_edge_dfs
from .graph import Graph, ceiling_bound


class NotTwoEdgeConnected(ValueError):
    def __init__(self, message: str, bridges: list[tuple[int, tuple[int, int]]] = ()):
        self.bridges = list(bridges)  # (edge id, endpoints)
        super().__init__(message)


class InvalidTree(ValueError):
    pass


def find_bridges(g: Graph) -> list[int]:
    """Edge ids of all bridges, ascending. Iterative low-link DFS.

    The edge used to enter a vertex is skipped by id rather than by parent
    vertex, so a parallel copy still counts as a back edge.
    """
    n = g.n
    off, nbr, eid = g.csr
    disc = [-1] * n
    low = [0] * n
    cursor = off[:-1]
    bridges = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        stack = [(s, -1)]
        while stack:
            v, via = stack[-1]
            c = cursor[v]
            if c < off[v + 1]:
                cursor[v] = c + 1
                e = eid[c]
                if e == via:
                    continue
                w = nbr[c]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        bridges.append(via)
    bridges.sort()
    return bridges


def connected_components(g: Graph) -> list[int]:
    """Component label per vertex (labels are 0, 1, ... in order of discovery)."""
    off, nbr, _ = g.csr
    label = [-1] * g.n
    k = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = k
        stack = [s]
        while stack:
            v = stack.pop()
            for w in nbr[off[v]:off[v + 1]]:
                if label[w] == -1:
                    label[w] = k
                    stack.append(w)
        k += 1
    return label


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or max(connected_components(g)) == 0


def two_edge_connectivity_failure(g: Graph) -> NotTwoEdgeConnected | None:
    """Why ``g`` is not 2-edge-connected, or ``None`` if it is."""
    if g.n < 2:
        return NotTwoEdgeConnected(f"graph has {g.n} vertices; at least 2 are required")
    label = connected_components(g)
    if max(label) > 0:
        other = label.index(1)
        return NotTwoEdgeConnected(f"graph is disconnected: no path between vertex 0 and vertex {other}")
    bridges = find_bridges(g)
    if bridges:
        listed = [(e, g.edges[e]) for e in bridges]
        shown = ", ".join(f"e{e}={{{u},{v}}}" for e, (u, v) in listed[:10])
        more = f" (+{len(listed) - 10} more)" if len(listed) > 10 else ""
        return NotTwoEdgeConnected(f"graph has {len(listed)} bridge(s): {shown}{more}", listed)
    return None


def is_two_edge_connected(g: Graph) -> bool:
    return two_edge_connectivity_failure(g) is None


def check_partition_cut(g: Graph, X) -> int:
    """Number of edges with exactly one endpoint in ``X``."""
    side = bytearray(g.n)
    for x in X:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
        side[x] = 1
    k = sum(side)
    if k == 0 or k == g.n:
        raise ValueError("X must be a nonempty proper subset of the vertices")
    return sum(1 for u, v in g.edges if side[u] != side[v])


@dataclass(frozen=True)
class TreeCheck:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def validate_spanning_tree(g: Graph, t: SpanningTree) -> TreeCheck:
    n, m = g.n, g.m
    edges = [int(e) for e in t.edges]
    recorded = [int(d) for d in t.deg]
    if len(recorded) != n:
        return TreeCheck(False, f"degree table has {len(t.deg)} entries, expected {n}")
    if any(not 0 <= e < m for e in edges):
        return TreeCheck(False, "invalid edge id")
    if len(set(edges)) != len(edges):
        return TreeCheck(False, "repeated edge id")
    if n == 0:
        return TreeCheck(False, "empty graph has no spanning tree")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * n
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
        ru, rv = find(u), find(v)
        if ru == rv:
            return TreeCheck(False, f"edge {e} closes a cycle")
        parent[ru] = rv
    if len({find(v) for v in range(n)}) != 1:
        return TreeCheck(False, "edge set is disconnected")
    if len(edges) != n - 1:
        return TreeCheck(False, f"{len(edges)} edges, a spanning tree has {n - 1}")
    if deg != recorded:
        bad = next(v for v in range(n) if deg[v] != recorded[v])
        return TreeCheck(False, f"recorded degree of vertex {bad} is {recorded[bad]}, actual {deg[bad]}")
    return TreeCheck(True)


@dataclass(frozen=True)
class DegreeRow:
    v: int
    deg_g: int
    deg_t: int
    bound: int
    slack: int


@dataclass(frozen=True)
class DegreeReport:
    rows: list[DegreeRow]

    @property
    def worst_slack(self) -> int:
        return min(r.slack for r in self.rows)

    @property
    def ok(self) -> bool:
        return all(r.deg_t <= r.bound for r in self.rows)

    def to_csv(self) -> str:
        out = ["v,deg_g,deg_t,bound,slack\n"]
        out.extend(f"{r.v},{r.deg_g},{r.deg_t},{r.bound},{r.slack}\n" for r in self.rows)
        return "".join(out)


def check_degree_bound(g: Graph, t: SpanningTree) -> DegreeReport:
    check = validate_spanning_tree(g, t)
    if not check:
        raise InvalidTree(check.reason)
    rows = []
    for v, (dg, dt) in enumerate(zip(g.degrees, t.deg.tolist())):
        b = ceiling_bound(dg)
        rows.append(DegreeRow(v, dg, dt, b, b - dt))
    return DegreeReport(rows)


@dataclass(frozen=True)
class OrientationStats:
    in_count: list[int]
    out_count: list[int]
    deg: list[int]

    @property
    def balanced_ok(self) -> list[bool]:
        return [i <= o + (d & 1) for i, o, d in zip(self.in_count, self.out_count, self.deg)]

    @property
    def all_balanced(self) -> bool:
        return all(self.balanced_ok)


def orientation_stats(g: Graph, L: EdgeDfsList, validate: bool = True) -> OrientationStats:
    """In/out counts of each vertex under the orientation induced by ``L``."""
    if validate:
        bad = validate_edge_dfs(g, L)
        if bad is not None:
            raise ValueError(f"not an edge DFS: {bad}")
    ins = np.bincount(np.asarray(L.heads, dtype=np.int64), minlength=g.n).tolist()
    outs = np.bincount(np.asarray(L.tails, dtype=np.int64), minlength=g.n).tolist()
    return OrientationStats(ins, outs, list(g.degrees))


def orientation_strongly_connected(g: Graph, L: EdgeDfsList) -> bool:
    """Whether the arcs tail->head of ``L`` form a strongly connected digraph.

    Experimental: observed on 2-edge-connected inputs, not relied upon.
    """
    n = g.n
    if n <= 1:
        return True
    fwd: list[list[int]] = [[] for _ in range(n)]
    rev: list[list[int]] = [[] for _ in range(n)]
    for t, h, _ in L:
        fwd[t].append(h)
        rev[h].append(t)

    def reaches_all(adj):
        seen = bytearray(n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    queue.append(y)
        return count == n

    return reaches_all(fwd) and reaches_all(rev)
