"""Undirected multigraph with stable edge ids, plus the plain-text edge-list format.

Text format::

    p <n> <m>
    e <u> <v>      (exactly m lines)

Lines starting with ``c `` are comments and may appear anywhere.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class Graph:
    """Immutable undirected multigraph on vertices ``0..n-1``.

    The identity of an edge is its position in the edge list. Parallel edges are
    allowed, self-loops are not. Endpoints are kept as two int64 arrays ``src``
    and ``dst``; ``edges`` gives the same data as ``(u, v)`` tuples.
    """

    __slots__ = ("n", "src", "dst", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        self._init(n, pairs[:, 0], pairs[:, 1])

    @classmethod
    def from_arrays(cls, n: int, src: Sequence[int], dst: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g._init(n, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64))
        return g

    def _init(self, n, src, dst):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(src) != len(dst):
            raise ValueError("endpoint arrays differ in length")
        if len(src):
            bad = np.flatnonzero((src < 0) | (src >= n) | (dst < 0) | (dst >= n))
            if len(bad):
                e = int(bad[0])
                raise ValueError(f"edge {e} = ({src[e]}, {dst[e]}) has an endpoint outside 0..{n - 1}")
            loops = np.flatnonzero(src == dst)
            if len(loops):
                e = int(loops[0])
                raise ValueError(f"edge {e} is a self-loop at vertex {src[e]}")
        src = np.ascontiguousarray(src)
        dst = np.ascontiguousarray(dst)
        src.flags.writeable = False
        dst.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.src)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.src.tolist(), self.dst.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.src, other.src)
                and np.array_equal(self.dst, other.dst))

    def __hash__(self):
        return hash((self.n, self.src.tobytes(), self.dst.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def adjacency_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Adjacency in compressed form: ``(offsets, neighbors, edge_ids)``.

        The slots of vertex ``v`` are ``offsets[v]:offsets[v+1]``, in edge-list
        insertion order.
        """
        n, m = self.n, self.m
        ends = np.empty(2 * m, dtype=np.int64)  # u0 v0 u1 v1 ...
        ends[0::2] = self.src
        ends[1::2] = self.dst
        order = np.argsort(ends, kind="stable")
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(ends, minlength=n), out=offsets[1:])
        return offsets, ends[order ^ 1], order >> 1

    @cached_property
    def adjacency_blocks(self) -> tuple[np.ndarray, np.ndarray]:
        """Packed per-vertex blocks used by the edge DFS kernel."""
        from ._kernels import block_layout

        return block_layout(*self.adjacency_arrays)

    @cached_property
    def csr(self) -> tuple[list[int], list[int], list[int]]:
        """:attr:`adjacency_arrays` as Python lists, for interpreted loops."""
        return tuple(a.tolist() for a in self.adjacency_arrays)

    def adjacency(self, v: int) -> list[tuple[int, int]]:
        """``(neighbor, edge_id)`` pairs of ``v`` in insertion order."""
        off, nbr, eid = self.csr
        lo, hi = off[v], off[v + 1]
        return list(zip(nbr[lo:hi], eid[lo:hi]))

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def degrees(self) -> list[int]:
        return np.diff(self.adjacency_arrays[0]).tolist()

    def neighbors(self, v: int) -> list[int]:
        off, nbr, _ = self.csr
        return nbr[off[v]:off[v + 1]]


def degree_ceiling_bound(g: Graph, v: int) -> int:
    """Return ``ceil(deg(v) / 2) + 1``, the per-vertex tree-degree budget."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return (g.degree(v) + 1) // 2 + 1


def ceiling_bound(deg: int) -> int:
    return (deg + 1) // 2 + 1


def parse_graph(text: str | bytes | Iterable[str]) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = text.split("\n") if isinstance(text, str) else list(text)
    if isinstance(text, str) and lines and lines[-1] == "":
        lines.pop()

    n = m = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith("c ") or line == "c":
            continue
        parts = line.split()
        if not parts:
            raise GraphFormatError("blank line", lineno)
        if n is None:
            if parts[0] != "p":
                raise GraphFormatError("missing header 'p <n> <m>'", lineno)
            if len(parts) != 3:
                raise GraphFormatError("malformed header", lineno)
            n, m = _nonneg(parts[1], lineno), _nonneg(parts[2], lineno)
            header_line = lineno
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"malformed edge line {line!r}", lineno)
        u, v = _nonneg(parts[1], lineno), _nonneg(parts[2], lineno)
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex id {max(u, v)} >= n={n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than m={m} edge lines", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header 'p <n> <m>'", 1)
    if len(edges) != m:
        raise GraphFormatError(f"header declares m={m} but found {len(edges)} edges", header_line)
    return Graph(n, edges)


def _nonneg(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"expected a non-negative integer, got {token!r}", lineno)
    return int(token)


def serialize_graph(g: Graph) -> str:
    out = [f"p {g.n} {g.m}\n"]
    out.extend(f"e {u} {v}\n" for u, v in zip(g.src.tolist(), g.dst.tolist()))
    return "".join(out)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_graph(g))
