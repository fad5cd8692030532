"""Independent brute-force oracles used by the test-suite.

Nothing here shares code with the package beyond the Graph container.
"""

from __future__ import annotations

import itertools


def connected(n, edges):
    if n <= 1:
        return True
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def bridges_by_removal(g):
    """Edges whose removal increases the number of components."""
    def components(edges):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        k = g.n
        for u, v in edges:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                k -= 1
        return k

    base = components(g.edges)
    return [e for e in range(g.m)
            if components([p for f, p in enumerate(g.edges) if f != e]) > base]


def two_edge_connected_brute(g):
    return g.n >= 2 and connected(g.n, g.edges) and not bridges_by_removal(g)


def is_edge_dfs_literal(g, items, virtual_start=False):
    """Check the three edge-DFS conditions by direct evaluation of X_j(v).

    Quadratic; for small graphs only. With ``virtual_start`` the start vertex
    counts as the head of an item 0 when searching for a resume point.
    """
    items = [tuple(it) for it in items]
    E = g.edges
    for t, h, e in items:
        if not 0 <= e < g.m or {t, h} != set(E[e]):
            return False
    if sorted(e for _, _, e in items) != list(range(g.m)):
        return False
    incident = [set() for _ in range(g.n)]
    for e, (u, v) in enumerate(E):
        incident[u].add(e)
        incident[v].add(e)
    heads = [None] + [h for _, h, _ in items]  # 1-based
    if virtual_start and items:
        heads[0] = items[0][0]
    l = len(items)
    for j in range(1, l):
        prefix = {items[k][2] for k in range(j)}

        def X(v):
            return incident[v] - prefix

        vj = heads[j]
        nt, _, ne = items[j]
        if X(vj):
            if nt != vj or ne not in X(vj):
                return False
        else:
            lo = 0 if virtual_start else 1
            cands = [jp for jp in range(lo, j) if X(heads[jp])]
            if not cands:
                return False
            target = heads[max(cands)]
            if nt != target or ne not in X(target):
                return False
    return True


def all_spanning_trees_combinations(g):
    """Every (n-1)-subset of edge ids that is acyclic, by plain combinations."""
    out = []
    for combo in itertools.combinations(range(g.m), g.n - 1):
        if connected(g.n, [g.edges[e] for e in combo]):
            out.append(combo)
    return out


def det_fraction(matrix):
    """Exact determinant via Fractions (independent of the Bareiss routine)."""
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in matrix]
    k = len(a)
    det = Fraction(1)
    for i in range(k):
        piv = next((r for r in range(i, k) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, k):
            f = a[r][i] / a[i][i]
            for c in range(i, k):
                a[r][c] -= f * a[i][c]
    return int(det)
