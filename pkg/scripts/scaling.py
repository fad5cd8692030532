"""Scaling run: wall-clock per edge next to exact operation counts.

Wall-clock follows the memory hierarchy once the working set leaves cache; the
operation counts (cursor advances + stack pops, queue traffic) stay linear.

    python scripts/scaling.py --min-exp 14 --max-exp 22 --reps 5 --csv out.csv
"""

import argparse

from lowdegst.bench import run_bench, size_params
from lowdegst.builder import build_spanning_tree
from lowdegst.edge_dfs import compute_edge_dfs
from lowdegst.generators import gen_random_2ec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-exp", type=int, default=14)
    ap.add_argument("--max-exp", type=int, default=22)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--csv")
    args = ap.parse_args()

    sizes = [1 << k for k in range(args.min_exp, args.max_exp + 1)]
    res = run_bench(sizes, args.seed, args.reps)
    print(f"{'m':>9} {'ns/edge':>8} {'dfs work/(n+m)':>15} {'enqueues/m':>11} {'dequeues/m':>11}")
    for row in res.rows:
        n, extra = size_params(row.m)
        g = gen_random_2ec(n, extra, args.seed)
        L = compute_edge_dfs(g, 0)
        _, trace = build_spanning_tree(g, L, 0)
        print(f"{row.m:>9} {row.t_total_ns / row.m:>8.1f} {L.work / (g.n + g.m):>15.4f} "
              f"{trace.enqueue_count / g.m:>11.4f} {trace.dequeue_count / g.m:>11.4f}")
    print(f"log-log slope: {res.slope:.3f}")
    print("adjacent ratios:", ", ".join(f"{r:.2f}" for r in res.ratios))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(res.to_csv())


if __name__ == "__main__":
    main()
