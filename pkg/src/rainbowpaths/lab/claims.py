"""Checks of the structural claims about the shift graph of triples."""

from __future__ import annotations

from dataclasses import dataclass

from ..generators import middle_element_colouring, shift_graph_triples
from ..graph import Colouring, Graph, _check_colouring, iter_bits


@dataclass(frozen=True)
class StarWitness:
    centre: int
    leaves: tuple[int, ...]

    def to_json(self) -> dict:
        return {"centre": self.centre, "leaves": list(self.leaves)}


def verify_rainbow_max_degree(g: Graph, c: Colouring, d: int) -> StarWitness | None:
    """Look for a rainbow star with ``d + 1`` leaves.

    Returns the first violating star (centre in vertex order, one leaf per
    colour, lowest vertex first) or ``None`` when every rainbow subgraph has
    maximum degree at most ``d``.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    _check_colouring(g, c)
    for v in range(g.n):
        picked: dict[int, int] = {}
        for u in iter_bits(g.adj[v]):
            if c[u] != c[v]:
                picked.setdefault(c[u], u)
            if len(picked) == d + 1:
                return StarWitness(v, tuple(sorted(picked.values())))
    return None


def first_non_monotone_rainbow_3path(g: Graph, c: Colouring) -> tuple[int, int, int] | None:
    """First 3-vertex path ``(u, v, w)`` with distinct colours that are not monotone along it."""
    _check_colouring(g, c)
    for v in range(g.n):
        nbrs = list(iter_bits(g.adj[v]))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                a, b, e = c[u], c[v], c[w]
                if len({a, b, e}) < 3:
                    continue
                if not (a < b < e or a > b > e):
                    return (u, v, w)
    return None


def verify_monotone_rainbow_3paths(n: int, colouring: Colouring | None = None) -> tuple[int, int, int] | None:
    """On the shift graph of triples of ``[n]``, every rainbow 3-vertex path
    has monotone colours.  Returns ``None`` when verified, else the first
    counterexample path.  ``colouring`` overrides the middle-element one."""
    if n < 4:
        raise ValueError("n must be at least 4")
    g, triples = shift_graph_triples(n)
    c = colouring if colouring is not None else middle_element_colouring(triples)
    return first_non_monotone_rainbow_3path(g, c)
