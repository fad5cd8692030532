"""Exhaustive check over all 2-edge-connected simple graphs on few vertices.

    python scripts/sweep.py --max-n 6
"""

import argparse
import time

from lowdegst.oracle import exhaustive_small_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    t0 = time.perf_counter()
    s = exhaustive_small_sweep(args.max_n)
    print(f"graphs per n: {s.graphs_by_n}")
    print(f"(graph, start) runs: {s.runs}, failures: {s.failures}")
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
