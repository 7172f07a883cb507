"""Compiled core of the colouring-partition search.

Vertices are assumed relabelled into search order, so the coloured set after
assigning vertex ``k`` is exactly ``0..k``.  Masks are int64, which caps the
graph at 62 vertices.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_VERTICES = 62

EXHAUSTED = 0
COUNTEREXAMPLE = 1
BUDGET = 2


@njit(cache=True)
def _ctz(x):
    n = 0
    while (x & 1) == 0:
        x >>= 1
        n += 1
    return n


@njit(cache=True)
def path_through(adj, col, coloured, v, t):
    """True iff some rainbow induced path on ``t`` coloured vertices contains ``v``.

    The path is grown from ``v`` at its tail first; at any point the search may
    switch to growing the head side, after which only the head grows.  Every
    path through ``v`` arises this way.
    """
    if t <= 1:
        return True
    pm = np.empty(t, np.int64)
    cm = np.empty(t, np.int64)
    head = np.empty(t, np.int64)
    tail = np.empty(t, np.int64)
    ct = np.empty(t, np.int64)
    ch = np.empty(t, np.int64)
    one = np.int64(1)
    pm[0] = one << v
    cm[0] = one << col[v]
    head[0] = v
    tail[0] = v
    ct[0] = adj[v] & coloured & ~pm[0]
    ch[0] = 0
    d = 0
    while d >= 0:
        if ct[d] != 0:
            low = ct[d] & -ct[d]
            ct[d] ^= low
            end = tail[d]
            at_tail = True
        elif ch[d] != 0:
            low = ch[d] & -ch[d]
            ch[d] ^= low
            end = head[d]
            at_tail = False
        else:
            d -= 1
            continue
        x = _ctz(low)
        if (adj[x] & pm[d]) != (one << end):
            continue
        cb = one << col[x]
        if cm[d] & cb:
            continue
        if d + 2 == t:
            return True
        nd = d + 1
        pm[nd] = pm[d] | low
        cm[nd] = cm[d] | cb
        if at_tail:
            tail[nd] = x
            head[nd] = head[d]
            ct[nd] = adj[x] & coloured & ~pm[nd]
            ch[nd] = adj[head[d]] & coloured & ~pm[nd]
        else:
            head[nd] = x
            tail[nd] = tail[d]
            ct[nd] = 0
            ch[nd] = adj[x] & coloured & ~pm[nd]
        d = nd
    return False


@njit(cache=True)
def search(adj, t, a, k, b, root, max_nodes):
    """Depth-first search over restricted growth strings, resumable.

    ``a[0..k-1]`` holds the assigned block of each earlier vertex; the next
    node tried is vertex ``k`` in block ``b``.  The search never backtracks
    above depth ``root``.  Returns ``(status, nodes, prunes, k, b)``; on
    ``BUDGET`` the pair ``(k, b)`` is the next node to try, on
    ``COUNTEREXAMPLE`` ``a`` holds the full assignment.
    """
    n = adj.shape[0]
    one = np.int64(1)
    blocks = np.zeros(n + 1, np.int64)
    nb = np.zeros(n + 1, np.int64)
    for i in range(k):
        blocks[a[i]] |= one << i
        nb[i + 1] = max(nb[i], a[i] + 1)
    nodes = 0
    prunes = 0
    while True:
        if b > nb[k]:
            k -= 1
            if k < root:
                return EXHAUSTED, nodes, prunes, k, b
            blocks[a[k]] &= ~(one << k)
            b = a[k] + 1
            continue
        if blocks[b] & adj[k]:
            b += 1
            continue
        if nodes >= max_nodes:
            return BUDGET, nodes, prunes, k, b
        nodes += 1
        a[k] = b
        coloured = (one << (k + 1)) - 1
        if path_through(adj, a, coloured, k, t):
            prunes += 1
            b += 1
            continue
        if k == n - 1:
            return COUNTEREXAMPLE, nodes, prunes, k, b
        blocks[b] |= one << k
        nb[k + 1] = max(nb[k], b + 1)
        k += 1
        b = 0
