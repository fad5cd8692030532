"""Named graph families and seeded random 2-edge-connected graphs.

Random graphs are driven by SplitMix64 (Steele, Lea & Flood 2014; increment
0x9E3779B97F4A7C15, mix constants 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB).
Output ``k`` (0-based) of seed ``s`` is ``mix(s + (k + 1) * gamma) mod 2**64``,
so the stream can be evaluated in bulk. A random-2ec graph consumes the stream
as follows:

* draws ``0 .. n-2``: Fisher-Yates shuffle of ``0..n-1``; for ``i = n-1 .. 1``
  swap ``perm[i]`` with ``perm[x % (i + 1)]``;
* edges ``(perm[i], perm[(i + 1) % n])`` for ``i = 0 .. n-1`` form the cycle;
* draws ``n-1+2k`` and ``n+2k`` give chord ``k``: ``u = x % n``,
  ``v = y % (n - 1)``, then ``v += 1`` if ``v >= u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1

FAMILIES = ("cycle", "complete", "wheel", "hypercube", "theta", "random-2ec")


def splitmix64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Outputs ``offset .. offset+count-1`` of the SplitMix64 stream for ``seed``."""
    k = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + k * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


def splitmix64_scalar(seed: int, k: int) -> int:
    """Reference scalar evaluation of output ``k``."""
    z = (seed + (k + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def gen_random_2ec(n: int, extra_edges: int, seed: int) -> Graph:
    """Seeded Hamiltonian cycle plus ``extra_edges`` uniform chords (parallel
    chords allowed)."""
    if n < 3:
        raise ValueError("random-2ec needs n >= 3")
    if extra_edges < 0:
        raise ValueError("extra_edges must be non-negative")
    if not 0 <= seed <= MASK64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    draws = splitmix64(seed, n - 1 + 2 * extra_edges)
    bounds = np.arange(n, 1, -1, dtype=np.uint64)  # i + 1 for i = n-1 .. 1
    swaps = (draws[: n - 1] % bounds).tolist()
    perm = list(range(n))
    for i, j in zip(range(n - 1, 0, -1), swaps):
        perm[i], perm[j] = perm[j], perm[i]
    p = np.array(perm, dtype=np.int64)
    chord = draws[n - 1:].reshape(-1, 2)
    cu = (chord[:, 0] % np.uint64(n)).astype(np.int64)
    cv = (chord[:, 1] % np.uint64(n - 1)).astype(np.int64)
    cv += cv >= cu
    src = np.concatenate([p, cu])
    dst = np.concatenate([np.roll(p, -1), cv])
    return Graph.from_arrays(n, src, dst)


def cycle(n: int) -> Graph:
    """Edges ``(i, i+1 mod n)``; ``n = 2`` gives two parallel edges."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    """Edges ``(i, j)``, ``i < j``, in lexicographic order."""
    if n < 3:
        raise ValueError("complete graph needs n >= 3")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def wheel(rim: int) -> Graph:
    """Hub 0 and rim ``1..rim``: the spokes ``(0, i)`` first, then the rim
    edges ``(i, i % rim + 1)``."""
    if rim < 3:
        raise ValueError("wheel needs rim >= 3")
    spokes = [(0, i) for i in range(1, rim + 1)]
    ring = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, tuple(spokes + ring))


def hypercube(d: int) -> Graph:
    """Vertices ``0..2**d-1``; for each ``v`` ascending and each bit ``b``
    ascending, edge ``(v, v ^ 2**b)`` when ``v`` has bit ``b`` clear."""
    if d < 2:
        raise ValueError("hypercube needs d >= 2")
    edges = [(v, v | (1 << b)) for v in range(1 << d) for b in range(d) if not v >> b & 1]
    return Graph(1 << d, tuple(edges))


def theta(lengths) -> Graph:
    """Endpoints 0 and 1 joined by one path per entry of ``lengths`` (edge
    counts). Internal vertices are numbered consecutively path by path and each
    path is listed from 0 towards 1."""
    lengths = list(lengths)
    if len(lengths) < 2 or any(L < 1 for L in lengths):
        raise ValueError("theta needs at least two paths of length >= 1")
    edges = []
    nxt = 2
    for L in lengths:
        prev = 0
        for _ in range(L - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, tuple(edges))


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def gen_family(spec: GenSpec) -> Graph:
    p = spec.params
    try:
        if spec.family == "cycle":
            return cycle(p["n"])
        if spec.family == "complete":
            return complete(p["n"])
        if spec.family == "wheel":
            return wheel(p["n"])
        if spec.family == "hypercube":
            return hypercube(p["d"])
        if spec.family == "theta":
            return theta(p["lengths"])
        if spec.family == "random-2ec":
            return gen_random_2ec(p["n"], p.get("extra", 0), spec.seed)
    except KeyError as exc:
        raise ValueError(f"family {spec.family!r} needs parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")
