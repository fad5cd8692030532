"""Build with every (start, root) pair on random graphs and report the worst
slack seen; the traversal start and the initial tree vertex need not agree.

    python scripts/start_vs_root.py --graphs 200
"""

import argparse
import random

from lowdegst.builder import build_spanning_tree
from lowdegst.edge_dfs import compute_edge_dfs
from lowdegst.generators import gen_random_2ec
from lowdegst.verify import check_degree_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=25)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    worst = None
    builds = 0
    for _ in range(args.graphs):
        n = rng.randint(3, args.max_n)
        g = gen_random_2ec(n, rng.randint(0, 2 * n), rng.getrandbits(64))
        for s in range(n):
            L = compute_edge_dfs(g, s)
            for r in range(n):
                tree, _ = build_spanning_tree(g, L, r, checked=True)
                slack = check_degree_bound(g, tree).worst_slack
                worst = slack if worst is None else min(worst, slack)
                builds += 1
    print(f"builds: {builds}, worst slack: {worst}")


if __name__ == "__main__":
    main()
