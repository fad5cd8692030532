"""Grow a spanning tree from the edge DFS using a FIFO queue of traversal items.

An item ``(u, v)`` attaches ``u`` to the tree when ``u`` is outside and ``v``
inside. Each vertex's incident items are enqueued once, when it joins, so the
queue sees exactly ``2m`` items on a completed run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .edge_dfs import EdgeDfsList, compute_edge_dfs
from .graph import Graph, ceiling_bound


class BuildError(RuntimeError):
    """The queue ran dry before the tree spanned the graph."""


class InvariantError(AssertionError):
    pass


@dataclass(eq=False)
class SpanningTree:
    root: int
    edges: np.ndarray  # tree edge ids in the order they were added
    parent_vertex: np.ndarray  # -1 at the root (and at unreachable vertices)
    parent_edge: np.ndarray
    deg: np.ndarray

    @property
    def tree_edges(self) -> frozenset[int]:
        return frozenset(self.edges.tolist())

    @property
    def n(self) -> int:
        return len(self.deg)

    @property
    def parent(self) -> list[tuple[int, int] | None]:
        """``(parent vertex, via edge)`` per vertex; ``None`` at the root."""
        return [None if p < 0 else (p, e)
                for p, e in zip(self.parent_vertex.tolist(), self.parent_edge.tolist())]

    @classmethod
    def from_edges(cls, g: Graph, edge_ids, root: int = 0) -> "SpanningTree":
        """Wrap an arbitrary edge-id collection. Parent links come from a BFS
        from ``root`` over the given edges; invalid ids are kept but ignored."""
        edge_ids = [int(e) for e in edge_ids]
        deg = [0] * g.n
        adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for e in edge_ids:
            if 0 <= e < g.m:
                u, v = g.edges[e]
                deg[u] += 1
                deg[v] += 1
                adj[u].append((v, e))
                adj[v].append((u, e))
        pv = [-1] * g.n
        pe = [-1] * g.n
        if 0 <= root < g.n:
            seen = {root}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y, e in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        pv[y], pe[y] = x, e
                        queue.append(y)
        return cls(root, np.array(edge_ids, dtype=np.int64), np.array(pv, dtype=np.int64),
                   np.array(pe, dtype=np.int64), np.array(deg, dtype=np.int64))


@dataclass(eq=False)
class BuilderTrace:
    add_item: np.ndarray  # index in L of the item used for each addition
    add_edge: np.ndarray
    add_vertex: np.ndarray  # the vertex that joined
    enqueue_count: int
    dequeue_count: int
    discards: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))  # checked mode only

    @property
    def additions(self) -> list[tuple[int, int, int]]:
        return list(zip(self.add_item.tolist(), self.add_edge.tolist(), self.add_vertex.tolist()))


def item_incidence(L: EdgeDfsList, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Items having ``v`` as an endpoint, in list order, are
    ``items[offsets[v]:offsets[v+1]]``."""
    return _kernels.item_incidence(L.tails, L.heads, n)


def build_spanning_tree(g: Graph, L: EdgeDfsList, root: int | None = None,
                        checked: bool = False) -> tuple[SpanningTree, BuilderTrace]:
    """Run the queue discipline over ``L`` starting from ``root`` (default: the
    traversal's start vertex).

    With ``checked=True`` every addition is tested for acyclicity, every discard
    is checked to be permanently ineligible, and the finished trace is audited.
    """
    n = g.n
    if root is None:
        root = L.start_vertex if len(L) else 0
    if not 0 <= root < n:
        raise ValueError(f"root {root} out of range for n={n}")
    (status, bad, size, pv, pe, deg, add_item, add_edge, add_vertex,
     enqueued, dequeued, discards) = _kernels.build_tree(
        n, L.tails, L.heads, L.edges, root, checked)
    if status == _kernels.BUILD_QUEUE_EXHAUSTED:
        raise BuildError(
            f"queue exhausted with {size} of {n} vertices in the tree; "
            "input is not 2-edge-connected or the traversal is invalid"
        )
    if status == _kernels.BUILD_CYCLE:
        raise InvariantError(f"item {bad} would close a cycle")
    if status == _kernels.BUILD_BAD_DISCARD:
        raise InvariantError(f"item {bad} discarded while its tail is outside the tree")
    tree = SpanningTree(root, add_edge, pv, pe, deg)
    trace = BuilderTrace(add_item, add_edge, add_vertex, int(enqueued), int(dequeued), discards)
    if checked:
        _audit(g, L, tree, trace)
    return tree, trace


def _audit(g: Graph, L: EdgeDfsList, tree: SpanningTree, trace: BuilderTrace) -> None:
    n = g.n
    if len(trace.add_item) != n - 1:
        raise InvariantError("wrong number of additions")
    if trace.enqueue_count != 2 * g.m:
        raise InvariantError(f"enqueued {trace.enqueue_count} items, expected {2 * g.m}")
    if trace.dequeue_count > trace.enqueue_count:
        raise InvariantError("more dequeues than enqueues")
    # a vertex is attached through at most one of its own outgoing items
    attached = L.tails[trace.add_item].tolist()
    if len(set(attached)) != len(attached) or tree.root in attached:
        raise InvariantError("a vertex was attached by more than one outgoing item")
    incoming = np.bincount(L.heads, minlength=n)
    over = np.flatnonzero(tree.deg > incoming + 1)
    if len(over):
        raise InvariantError(f"vertex {over[0]}: tree degree exceeds in-count + 1")
    for v, d in enumerate(tree.deg.tolist()):
        if d > ceiling_bound(g.degree(v)):
            raise InvariantError(f"vertex {v}: tree degree {d} exceeds ceil(deg/2)+1")


def low_degree_spanning_tree(g: Graph, start: int = 0, root: int | None = None, *,
                             force: bool = False, checked: bool = False):
    """Spanning tree with ``deg_T(v) <= ceil(deg_G(v)/2) + 1`` for every vertex.

    Returns ``(tree, report)``. Raises :class:`~lowdegst.verify.NotTwoEdgeConnected`
    unless ``g`` is 2-edge-connected (skip the test with ``force=True``). A
    single-vertex graph yields the trivial tree.
    """
    from .verify import check_degree_bound, two_edge_connectivity_failure

    if g.n == 0:
        raise ValueError("graph has no vertices")
    if root is None:
        root = start
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for n={g.n}")
    if g.n == 1:
        empty = np.empty(0, dtype=np.int64)
        minus = np.full(1, -1, dtype=np.int64)
        tree = SpanningTree(root, empty, minus, minus.copy(), np.zeros(1, dtype=np.int64))
        return tree, check_degree_bound(g, tree)
    if not force:
        failure = two_edge_connectivity_failure(g)
        if failure is not None:
            raise failure
    L = compute_edge_dfs(g, start)
    tree, _ = build_spanning_tree(g, L, root, checked=checked)
    return tree, check_degree_bound(g, tree)


class TreeFormatError(ValueError):
    pass


def format_tree(g: Graph, tree: SpanningTree) -> str:
    """``t <root> <n>``, one ``e <child> <parent> <edge>`` line per addition,
    then the degree table as ``d <v> <deg_T> <bound>`` lines."""
    out = [f"t {tree.root} {g.n}\n"]
    pv = tree.parent_vertex
    for e in tree.edges.tolist():
        u, v = g.edges[e]
        child = u if pv[u] == v and tree.parent_edge[u] == e else v
        parent = v if child == u else u
        out.append(f"e {child} {parent} {e}\n")
    out.append("c degrees:\n")
    out.extend(f"d {v} {d} {ceiling_bound(dg)}\n"
               for v, (d, dg) in enumerate(zip(tree.deg.tolist(), g.degrees)))
    return "".join(out)


def parse_tree(text: str, g: Graph) -> SpanningTree:
    """Read a tree file written by :func:`format_tree`. ``d`` lines are
    informational and ignored; degrees are recomputed from the edges."""
    root = None
    edge_ids = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] in ("c", "d"):
            continue
        if root is None:
            if parts[0] != "t" or len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                raise TreeFormatError(f"line {lineno}: expected header 't <root> <n>'")
            root, n = int(parts[1]), int(parts[2])
            if n != g.n:
                raise TreeFormatError(f"line {lineno}: tree is for n={n}, graph has n={g.n}")
            continue
        if parts[0] != "e" or len(parts) != 4 or not all(p.isdigit() for p in parts[1:]):
            raise TreeFormatError(f"line {lineno}: malformed edge line {line!r}")
        u, v, e = map(int, parts[1:])
        if e >= g.m or {u, v} != set(g.edges[e]):
            raise TreeFormatError(f"line {lineno}: edge {e} does not join {u} and {v}")
        edge_ids.append(e)
    if root is None:
        raise TreeFormatError("missing header 't <root> <n>'")
    return SpanningTree.from_edges(g, edge_ids, root)
