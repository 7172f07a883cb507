"""Exact small-graph invariants: clique number, chromatic number, girth."""

from __future__ import annotations

from collections import deque

from .graph import ColourPartition, Graph, NodeCounter, iter_bits


def _colour_sort(g: Graph, cand: int) -> list[tuple[int, int]]:
    # Greedy colouring of the candidate set; (vertex, colour bound) pairs in
    # non-decreasing bound order, as in the MCQ family of clique solvers.
    out = []
    colour = 0
    while cand:
        colour += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~g.adj[v] & ~low
            cand &= ~low
            out.append((v, colour))
    return out


def clique_number(g: Graph, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with a maximum clique as certificate.

    Branch and bound over bitsets with a greedy-colouring upper bound.
    Raises :class:`BudgetExhausted` after ``budget`` branch nodes.
    """
    counter = NodeCounter(budget)
    best: list[int] = []

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best
        for v, bound in reversed(_colour_sort(g, cand)):
            if len(chosen) + bound <= len(best):
                return
            counter.tick()
            chosen.append(v)
            rest = cand & g.adj[v]
            if rest:
                expand(chosen, rest)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return len(best), tuple(sorted(best))


def _pick_dsatur(g: Graph, uncol: int, sat: list[int]) -> int:
    best_v, best_key = -1, (-1, -1)
    for v in iter_bits(uncol):
        key = (sat[v].bit_count(), (g.adj[v] & uncol).bit_count())
        if key > best_key:
            best_v, best_key = v, key
    return best_v


def dsatur_colouring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring, colours ``0..k-1``."""
    colour = [-1] * g.n
    sat = [0] * g.n
    uncol = (1 << g.n) - 1
    while uncol:
        v = _pick_dsatur(g, uncol, sat)
        c = (~sat[v] & (sat[v] + 1)).bit_length() - 1
        colour[v] = c
        uncol &= ~(1 << v)
        for u in iter_bits(g.adj[v] & uncol):
            sat[u] |= 1 << c
    return colour


def _partition(colour: list[int]) -> ColourPartition:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        groups.setdefault(c, []).append(v)
    return ColourPartition(groups.values())


def chromatic_number(g: Graph, budget: int | None = None) -> tuple[int, ColourPartition]:
    """Exact chromatic number with an optimal colour partition.

    DSATUR branch and bound: the maximum clique is pre-coloured and gives the
    lower bound, a greedy DSATUR run gives the initial upper bound.  The
    empty graph has chromatic number 0.
    """
    n = g.n
    if n == 0:
        return 0, ColourPartition(())
    counter = NodeCounter(budget)
    lower, clique = clique_number(g)
    best = dsatur_colouring(g)
    upper = max(best) + 1
    if upper == lower:
        return upper, _partition(best)

    colour = [-1] * n
    sat = [0] * n
    uncol = (1 << n) - 1
    for i, v in enumerate(clique):
        colour[v] = i
        uncol &= ~(1 << v)
    for v in clique:
        for u in iter_bits(g.adj[v] & uncol):
            sat[u] |= 1 << colour[v]

    def search(uncol: int, used: int) -> None:
        nonlocal upper, best
        if not uncol:
            upper, best = used, list(colour)
            return
        counter.tick()
        v = _pick_dsatur(g, uncol, sat)
        options = list(iter_bits(~sat[v] & ((1 << used) - 1)))
        if used + 1 < upper:
            options.append(used)
        rest = uncol & ~(1 << v)
        for c in options:
            if max(used, c + 1) >= upper:
                break
            colour[v] = c
            touched = [u for u in iter_bits(g.adj[v] & rest) if not sat[u] >> c & 1]
            for u in touched:
                sat[u] |= 1 << c
            search(rest, max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            colour[v] = -1
            if upper == lower:
                return

    search(uncol, len(clique))
    return upper, _partition(best)


def is_k_colourable(g: Graph, k: int) -> bool:
    """Plain backtracking k-colourability test in vertex order (no bounds)."""
    colour = [0] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(colour[u] != c for u in iter_bits(g.adj[v]) if u < v):
                colour[v] = c
                if place(v + 1):
                    return True
        colour[v] = 0
        return False

    return place(0)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` if the graph is acyclic."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best
