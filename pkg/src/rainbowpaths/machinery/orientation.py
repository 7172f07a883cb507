"""Colour orientations and monotone paths (the Gallai-Roy route)."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from ..graph import Colouring, Graph, PathWitness, _check_colouring


class CyclicOrientation(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: tuple[tuple[int, int], ...]

    def out_neighbours(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.base.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return out

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm, smallest ready vertex first; ``None`` if cyclic."""
        n = self.base.n
        indeg = [0] * n
        out = self.out_neighbours()
        for _, v in self.arcs:
            indeg[v] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            u = heapq.heappop(ready)
            order.append(u)
            for v in out[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(ready, v)
        return order if len(order) == n else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None


def orient_by_colour(g: Graph, c: Colouring) -> Orientation:
    """Direct every edge towards its endpoint of higher colour."""
    _check_colouring(g, c)
    arcs = []
    for u, v in g.edges():
        if c[u] == c[v]:
            raise ValueError(f"colouring is not proper: edge {u}-{v} has colour {c[u]} at both ends")
        arcs.append((u, v) if c[u] < c[v] else (v, u))
    return Orientation(g, tuple(arcs))


def longest_directed_path(o: Orientation) -> PathWitness:
    """A directed path with the most vertices, by DP over a topological order.

    The witness is flagged rainbow on the understanding that the orientation
    came from :func:`orient_by_colour`; it is not flagged induced.
    """
    order = o.topological_order()
    if order is None:
        raise CyclicOrientation("orientation has a directed cycle")
    n = o.base.n
    if n == 0:
        return PathWitness((), induced=False, rainbow=True)
    preds: list[list[int]] = [[] for _ in range(n)]
    for u, v in o.arcs:
        preds[v].append(u)
    length = [1] * n
    back = [-1] * n
    for v in order:
        for u in sorted(preds[v]):
            if length[u] + 1 > length[v]:
                length[v] = length[u] + 1
                back[v] = u
    end = max(range(n), key=lambda v: (length[v], -v))
    path = [end]
    while back[path[-1]] != -1:
        path.append(back[path[-1]])
    path.reverse()
    return PathWitness(tuple(path), induced=False, rainbow=True)
