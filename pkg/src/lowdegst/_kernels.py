"""Compiled inner loops for the edge DFS and the queue-driven tree builder.

Both are written against flat int64 arrays and return status codes instead of
raising, so the Python wrappers own all error reporting.
"""

import numpy as np
from numba import njit

BUILD_OK = 0
BUILD_QUEUE_EXHAUSTED = 1
BUILD_CYCLE = 2
BUILD_BAD_DISCARD = 3


MAX_EDGES = 1 << 28  # keeps every block offset and item index inside int32


def block_layout(off, nbr, eid):
    """Pack the adjacency into one int32 array of per-vertex blocks.

    Block of ``v`` at ``base[v]``: ``[v, cursor, end, q0, e0, q1, e1, ...]`` where
    ``cursor``/``end`` are absolute positions of the unread/past-the-end slot and
    each slot holds the *block position* of the neighbour and the edge id. One
    cache line per arrival then covers the vertex id, its cursor and its next
    slot.
    """
    n = len(off) - 1
    deg = np.diff(off)
    base = 3 * np.arange(n, dtype=np.int64) + 2 * off[:-1]
    blocks = np.empty(3 * n + 2 * len(nbr), dtype=np.int32)
    blocks[base] = np.arange(n)
    blocks[base + 1] = base + 3
    blocks[base + 2] = base + 3 + 2 * deg
    owner = np.repeat(np.arange(n), deg)
    pos = base[owner] + 3 + 2 * (np.arange(len(nbr)) - off[owner])
    blocks[pos] = base[nbr]
    blocks[pos + 1] = eid
    return blocks, base


@njit(cache=True)
def edge_dfs(blocks0, base, m, start):
    blocks = blocks0.copy()  # cursors are advanced in place
    used = np.zeros((m + 7) >> 3, dtype=np.uint8)
    tails = np.empty(m, dtype=np.int32)
    heads = np.empty(m, dtype=np.int32)
    edges = np.empty(m, dtype=np.int32)
    # arrival stack of block positions; exhausted vertices are popped lazily,
    # so the top is always the latest reached vertex with untraversed edges
    stack = np.empty(m + 1, dtype=np.int32)
    stack[0] = base[start]
    top = 1
    count = 0
    pops = 0
    while top > 0:
        p = stack[top - 1]
        c = blocks[p + 1]
        hi = blocks[p + 2]
        while c < hi:
            e = blocks[c + 1]
            if not (used[e >> 3] >> (e & 7)) & 1:
                break
            c += 2
        if c == hi:
            blocks[p + 1] = c
            top -= 1
            pops += 1
            continue
        e = blocks[c + 1]
        q = blocks[c]
        blocks[p + 1] = c + 2
        used[e >> 3] |= np.uint8(1 << (e & 7))
        tails[count] = blocks[p]
        heads[count] = blocks[q]
        edges[count] = e
        count += 1
        stack[top] = q
        top += 1
    advances = 0
    for v in range(len(base)):
        advances += (blocks[base[v] + 1] - base[v] - 3) >> 1
    return tails[:count], heads[:count], edges[:count], advances + pops


@njit(cache=True)
def item_incidence(tails, heads, n):
    offsets = np.zeros(n + 1, dtype=np.int32)
    for i in range(len(tails)):
        offsets[tails[i] + 1] += 1
        offsets[heads[i] + 1] += 1
    for v in range(n):
        offsets[v + 1] += offsets[v]
    fill = offsets[:n].copy()
    items = np.empty(2 * len(tails), dtype=np.int32)
    for i in range(len(tails)):
        t = tails[i]
        items[fill[t]] = i
        fill[t] += 1
        h = heads[i]
        items[fill[h]] = i
        fill[h] += 1
    return offsets, items


@njit(cache=True)
def _find(uf, x):
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


@njit(cache=True)
def build_tree(n, tails, heads, eids, root, checked):
    zoff, zitems = item_incidence(tails, heads, n)
    l = len(tails)
    in_tree = np.zeros(n, dtype=np.bool_)
    in_tree[root] = True
    parent_v = np.full(n, -1, dtype=np.int32)
    parent_e = np.full(n, -1, dtype=np.int32)
    deg = np.zeros(n, dtype=np.int32)
    add_item = np.empty(max(n - 1, 0), dtype=np.int32)
    add_edge = np.empty(max(n - 1, 0), dtype=np.int32)
    add_vertex = np.empty(max(n - 1, 0), dtype=np.int32)
    discards = np.empty(2 * l if checked else 0, dtype=np.int32)
    ndisc = 0
    uf = np.arange(n) if checked else np.empty(0, dtype=np.int64)

    # FIFO queue of item indices; at most 2l items are ever enqueued
    queue = np.empty(2 * l, dtype=np.int32)
    qtail = 0
    for k in range(zoff[root], zoff[root + 1]):
        queue[qtail] = zitems[k]
        qtail += 1
    qhead = 0
    size = 1
    status = BUILD_OK
    bad = -1
    while size < n:
        if qhead == qtail:
            status = BUILD_QUEUE_EXHAUSTED
            break
        i = queue[qhead]
        qhead += 1
        u = tails[i]
        v = heads[i]
        if in_tree[u] or not in_tree[v]:
            if checked:
                # queued items always touch the tree, so the tail must be inside
                if not in_tree[u]:
                    status = BUILD_BAD_DISCARD
                    bad = i
                    break
                discards[ndisc] = i
                ndisc += 1
            continue
        e = eids[i]
        if checked:
            ru = _find(uf, u)
            rv = _find(uf, v)
            if ru == rv:
                status = BUILD_CYCLE
                bad = i
                break
            uf[ru] = rv
        in_tree[u] = True
        parent_v[u] = v
        parent_e[u] = e
        deg[u] += 1
        deg[v] += 1
        add_item[size - 1] = i
        add_edge[size - 1] = e
        add_vertex[size - 1] = u
        size += 1
        for k in range(zoff[u], zoff[u + 1]):
            queue[qtail] = zitems[k]
            qtail += 1
    return (status, bad, size, parent_v, parent_e, deg, add_item, add_edge, add_vertex,
            qtail, qhead, discards[:ndisc])
