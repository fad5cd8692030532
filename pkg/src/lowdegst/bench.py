"""Scaling harness: time the edge DFS and the tree build on random 2-edge-connected
graphs of doubling size."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .builder import build_spanning_tree
from .edge_dfs import compute_edge_dfs
from .generators import cycle, gen_random_2ec

CSV_HEADER = "n,m,seed,t_dfs_ns,t_build_ns,t_total_ns,enqueues"


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    seed: int
    t_dfs_ns: int
    t_build_ns: int
    t_total_ns: int
    enqueues: int

    def csv(self) -> str:
        return (f"{self.n},{self.m},{self.seed},{self.t_dfs_ns},{self.t_build_ns},"
                f"{self.t_total_ns},{self.enqueues}")


@dataclass(frozen=True)
class BenchResult:
    rows: list[BenchRow]
    slope: float | None  # least-squares slope of log t_total against log m
    errors: list[tuple[int, str]]  # (m target, message) for sizes that failed

    @property
    def ratios(self) -> list[float]:
        return [b.t_total_ns / a.t_total_ns for a, b in zip(self.rows, self.rows[1:])]

    def to_csv(self) -> str:
        return "".join(line + "\n" for line in [CSV_HEADER] + [r.csv() for r in self.rows])


def size_params(m_target: int) -> tuple[int, int]:
    """``(n, extra)`` for a graph with ``m_target`` edges."""
    n = max(m_target // 3, 3)
    return n, max(m_target - n, 0)


def loglog_slope(ms, ts) -> float | None:
    if len(ms) < 2:
        return None
    return float(np.polyfit(np.log(ms), np.log(ts), 1)[0])


def _warm_up():
    g = cycle(4)
    build_spanning_tree(g, compute_edge_dfs(g, 0), 0)


def time_one(g, reps: int) -> tuple[int, int, int, int]:
    """Median (t_dfs, t_build, t_total) in ns over ``reps`` runs, plus enqueues."""
    dfs, build, total = [], [], []
    enqueues = None
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            L = compute_edge_dfs(g, 0)
            t1 = time.perf_counter_ns()
            _, trace = build_spanning_tree(g, L, 0)
            t2 = time.perf_counter_ns()
            dfs.append(t1 - t0)
            build.append(t2 - t1)
            total.append(t2 - t0)
            enqueues = trace.enqueue_count
            del L, trace
    finally:
        if gc_was_enabled:
            gc.enable()
    return (int(statistics.median(dfs)), int(statistics.median(build)),
            int(statistics.median(total)), enqueues)


def run_bench(sizes, seed: int = 7, reps: int = 5, log=None) -> BenchResult:
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if reps < 1:
        raise ValueError("reps must be positive")
    _warm_up()
    rows, errors = [], []
    for target in sizes:
        try:
            n, extra = size_params(target)
            g = gen_random_2ec(n, extra, seed)
            g.adjacency_blocks  # build adjacency before the clock starts
            t_dfs, t_build, t_total, enq = time_one(g, reps)
            rows.append(BenchRow(n, g.m, seed, t_dfs, t_build, t_total, enq))
            if log:
                log(rows[-1].csv())
            del g
        except MemoryError as exc:
            errors.append((target, f"allocation failure: {exc}"))
    slope = loglog_slope([r.m for r in rows], [r.t_total_ns for r in rows])
    return BenchResult(rows, slope, errors)
