"""Edge depth-first traversal: every edge exactly once, as directed items.

After traversing an edge into ``v`` the walk continues from ``v`` if it still
has an untraversed edge; otherwise it resumes at the most recently reached
vertex that still has one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .graph import Graph


class TraversalItem(NamedTuple):
    tail: int
    head: int
    edge: int


class EdgeDfsError(ValueError):
    pass


@dataclass(eq=False)
class EdgeDfsList:
    """Ordered traversal items stored as three parallel int32 arrays."""

    tails: np.ndarray
    heads: np.ndarray
    edges: np.ndarray
    # cursor advances + stack pops spent while computing the list, if known
    work: int | None = None

    @classmethod
    def from_items(cls, items) -> "EdgeDfsList":
        arr = np.array([tuple(it) for it in items], dtype=np.int32).reshape(-1, 3)
        return cls(arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy())

    @property
    def start_vertex(self) -> int | None:
        return int(self.tails[0]) if len(self.tails) else None

    def __len__(self) -> int:
        return len(self.edges)

    def __getitem__(self, i: int) -> TraversalItem:
        return TraversalItem(int(self.tails[i]), int(self.heads[i]), int(self.edges[i]))

    def __iter__(self) -> Iterator[TraversalItem]:
        return map(TraversalItem, self.tails.tolist(), self.heads.tolist(), self.edges.tolist())

    @property
    def items(self) -> list[TraversalItem]:
        return list(self)

    def __eq__(self, other):
        if isinstance(other, EdgeDfsList):
            return (np.array_equal(self.tails, other.tails) and np.array_equal(self.heads, other.heads)
                    and np.array_equal(self.edges, other.edges))
        return NotImplemented


def compute_edge_dfs(g: Graph, start: int = 0) -> EdgeDfsList:
    """Compute the edge DFS of ``g`` from ``start``, taking the lowest untraversed
    adjacency slot at each step. Runs in O(n + m)."""
    n, m = g.n, g.m
    if not 0 <= start < n:
        raise EdgeDfsError(f"start vertex {start} out of range for n={n}")
    if m == 0:
        raise EdgeDfsError("graph has no edges")
    if m >= _kernels.MAX_EDGES:
        raise EdgeDfsError(f"graph too large: m={m}")
    blocks, base = g.adjacency_blocks
    tails, heads, edges, work = _kernels.edge_dfs(blocks, base, m, start)
    if len(edges) != m:
        raise EdgeDfsError(
            f"graph is disconnected: only {len(edges)} of {m} edges reachable from {start}"
        )
    return EdgeDfsList(tails, heads, edges, work=int(work))


@dataclass(frozen=True)
class Violation:
    condition: str  # "i", "ii" or "iii"
    index: int  # 0-based position of the offending item (len(L) for a missing edge)
    message: str

    def __str__(self):
        return f"condition ({self.condition}) violated at item {self.index}: {self.message}"


def validate_edge_dfs(g: Graph, L) -> Violation | None:
    """Check a candidate list against the three edge-DFS conditions.

    Returns ``None`` when ``L`` is an edge DFS of ``g``, otherwise the first
    violation found scanning left to right. ``L`` may be an :class:`EdgeDfsList`
    or any sequence of ``(tail, head, edge)`` triples.

    After a dead end the walk must resume at the most recent *head* that still
    has untraversed edges. The start vertex does not qualify unless some item
    has already entered it, so graphs with bridges can have no valid list from
    some starts.
    """
    items = list(L)
    m = g.m
    remaining = list(g.degrees)
    seen = bytearray(m)
    stack: list[int] = []
    for i, (t, h, e) in enumerate(items):
        if not (isinstance(e, int) and 0 <= e < m) or {t, h} != set(g.edges[e]):
            return Violation("i", i, f"item ({t}, {h}) does not match edge {e}")
        if seen[e]:
            return Violation("ii", i, f"edge {e} traversed twice")
        if i > 0:
            while stack and remaining[stack[-1]] == 0:
                stack.pop()
            if not stack:
                return Violation("iii", i, "no earlier vertex has untraversed edges")
            expected = stack[-1]
            if t != expected:
                prev = items[i - 1][1]
                why = (f"vertex {prev} still has untraversed edges" if expected == prev
                       else f"must resume at vertex {expected}")
                return Violation("iii", i, f"tail is {t} but {why}")
        seen[e] = 1
        remaining[t] -= 1
        remaining[h] -= 1
        stack.append(h)
    if len(items) != m:
        missing = next(e for e in range(m) if not seen[e])
        return Violation("ii", len(items), f"edge {missing} = {g.edges[missing]} missing")
    return None


@dataclass(frozen=True)
class StepClassification:
    kinds: list[str]  # kinds[i] relates item i to item i+1: "cross" or "backtrack"
    final_vertices: frozenset[int]


def classify_steps(L: EdgeDfsList | Sequence) -> StepClassification:
    tails = [it[0] for it in L]
    heads = [it[1] for it in L]
    if not heads:
        raise EdgeDfsError("empty traversal")
    kinds = ["cross" if heads[i] == tails[i + 1] else "backtrack" for i in range(len(heads) - 1)]
    finals = {heads[i] for i, k in enumerate(kinds) if k == "backtrack"}
    finals.add(heads[-1])
    return StepClassification(kinds, frozenset(finals))


def format_edge_dfs(L: EdgeDfsList) -> str:
    out = [f"l {len(L)}\n"]
    out.extend(f"{t} {h} {e}\n" for t, h, e in L)
    return "".join(out)
