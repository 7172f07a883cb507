"""Graph families: Mycielski iterates, shift graphs of triples, standard graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import NamedTuple

from .graph import Colouring, Graph, is_proper


class TripleVertex(NamedTuple):
    a: int
    b: int
    c: int


def mycielski(g: Graph) -> Graph:
    """Mycielski construction.

    Vertices ``0..n-1`` are the originals, ``n..2n-1`` their shadows and
    ``2n`` the apex.  Shadow ``n+i`` is joined to the neighbours of ``i`` and
    to the apex.
    """
    n = g.n
    edges = list(g.edges())
    for v in range(n):
        for u in g.neighbours(v):
            edges.append((n + v, u))
        edges.append((n + v, 2 * n))
    return Graph.from_edges(2 * n + 1, edges)


def shift_graph_triples(n: int) -> tuple[Graph, list[TripleVertex]]:
    """Shift graph on the 3-subsets of ``{1..n}``; ``{a,b,c} ~ {b,c,d}`` for ``a<b<c<d``.

    Vertices are indexed in lexicographic order of the triples.
    """
    if n < 3:
        raise ValueError("shift graph of triples needs n >= 3")
    triples = [TripleVertex(*t) for t in combinations(range(1, n + 1), 3)]
    index = {t: i for i, t in enumerate(triples)}
    edges = [(index[TripleVertex(a, b, c)], index[TripleVertex(b, c, d)])
             for a, b, c, d in combinations(range(1, n + 1), 4)]
    return Graph.from_edges(len(triples), edges), triples


def middle_element_colouring(triples: list[TripleVertex]) -> Colouring:
    return Colouring(t.b for t in triples)


def shift_graph_with_colouring(n: int) -> tuple[Graph, list[TripleVertex], Colouring]:
    g, triples = shift_graph_triples(n)
    c = middle_element_colouring(triples)
    assert is_proper(g, c)
    return g, triples, c


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError("path needs n >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """``K_{s,t}`` with sides ``0..s-1`` and ``s..s+t-1``."""
    if s < 0 or t < 0:
        raise ValueError("side sizes must be non-negative")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    """Outer cycle ``0..4``, spokes ``i``-``i+5``, inner pentagram on ``5..9``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def kneser(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of an n-set, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise ValueError("kneser(n, k) needs k >= 1 and n >= 2k")
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def grotzsch() -> Graph:
    return mycielski(cycle(5))


def mycielski_iterate(base: Graph, times: int) -> Graph:
    g = base
    for _ in range(times):
        g = mycielski(g)
    return g


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_triangle_free(n: int, seed: int) -> Graph:
    """Maximal triangle-free graph from a seeded random edge order.

    Edges are offered in a random order and accepted unless they would close
    a triangle, so the result is maximal and deterministic per seed.
    """
    if n < 1:
        raise ValueError("random_triangle_free needs n >= 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj = [0] * n
    for u, v in pairs:
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "petersen": petersen,
    "kneser": kneser,
    "grotzsch": grotzsch,
    "shift": lambda n: shift_graph_triples(n)[0],
    "random_triangle_free": random_triangle_free,
    "random": lambda n, p, seed: random_graph(int(n), float(p), int(seed)),
}


def standard_family(name: str, *params) -> Graph:
    """Build a named graph, e.g. ``standard_family("kneser", 5, 2)``.

    ``mycielski`` takes an iteration count and a base family spec, so
    ``standard_family("mycielski", 2, "cycle", 5)`` is the 23-vertex graph.
    """
    if name == "mycielski":
        if len(params) < 2:
            raise ValueError("mycielski needs an iteration count and a base family")
        return mycielski_iterate(standard_family(params[1], *params[2:]), int(params[0]))
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None
    if name == "random":
        return builder(*params)
    try:
        return builder(*(int(p) for p in params))
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {params}") from exc
