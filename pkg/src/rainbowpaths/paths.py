"""Searches for rainbow induced paths and holes.

All searches are depth-first, lowest vertex first, so the first witness is
deterministic for a given input.  Colours are compared through a dense
renumbering so colour sets fit in a bitmask.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import (
    Colouring,
    Graph,
    HoleWitness,
    NodeCounter,
    PathWitness,
    _check_colouring,
    is_induced_path,
    is_rainbow,
    iter_bits,
    to_mask,
)


def iter_path_extensions(
    g: Graph,
    prefix: Sequence[int],
    colours: Sequence[int] | None = None,
    max_len: int | None = None,
    counter: NodeCounter | None = None,
    allowed: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield ``prefix`` and every induced path obtained by extending it at its last vertex.

    With ``colours`` (dense ints) only rainbow extensions are followed.
    ``allowed`` restricts new vertices to a bitmask.  ``prefix`` is trusted to
    be an induced (and, with colours, rainbow) path already.
    """
    path = list(prefix)
    if allowed is None:
        allowed = (1 << g.n) - 1
    adj = g.adj

    def grow(pmask: int, cmask: int) -> Iterator[tuple[int, ...]]:
        yield tuple(path)
        if max_len is not None and len(path) >= max_len:
            return
        y = path[-1]
        inner = pmask & ~(1 << y)
        for x in iter_bits(adj[y] & allowed & ~pmask):
            if adj[x] & inner:
                continue
            cbit = 0
            if colours is not None:
                cbit = 1 << colours[x]
                if cmask & cbit:
                    continue
            if counter is not None:
                counter.tick()
            path.append(x)
            yield from grow(pmask | 1 << x, cmask | cbit)
            path.pop()

    cmask = 0
    if colours is not None:
        cmask = to_mask(colours[v] for v in path)
    yield from grow(to_mask(path), cmask)


def find_rainbow_induced_path(
    g: Graph, c: Colouring, s: int, budget: int | None = None
) -> PathWitness | None:
    """First rainbow induced path on ``s`` vertices, or ``None``.

    A single vertex counts as a 1-vertex path.  Raises
    :class:`BudgetExhausted` if ``budget`` extension steps do not settle it.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    _check_colouring(g, c)
    dense = c.dense()
    counter = NodeCounter(budget)
    for start in range(g.n):
        for p in iter_path_extensions(g, (start,), dense, max_len=s, counter=counter):
            if len(p) == s:
                return PathWitness(p, induced=True, rainbow=True)
    return None


def find_induced_path(g: Graph, s: int, budget: int | None = None) -> PathWitness | None:
    """First induced path on ``s`` vertices, ignoring colours."""
    if s < 1:
        raise ValueError("s must be at least 1")
    counter = NodeCounter(budget)
    for start in range(g.n):
        for p in iter_path_extensions(g, (start,), None, max_len=s, counter=counter):
            if len(p) == s:
                return PathWitness(p, induced=True, rainbow=False)
    return None


def iter_holes(
    g: Graph, colours: Sequence[int] | None = None, counter: NodeCounter | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every hole once, as a vertex cycle starting at its smallest vertex.

    With ``colours`` (dense ints) only rainbow holes are produced and
    colour repeats prune the search.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    for v0 in range(g.n):
        higher = full & ~((1 << (v0 + 1)) - 1)
        for v1 in iter_bits(adj[v0] & higher):
            if colours is not None and colours[v1] == colours[v0]:
                continue
            path = [v0, v1]

            def grow(pmask: int, cmask: int) -> Iterator[tuple[int, ...]]:
                y = path[-1]
                inner = pmask & ~(1 << y) & ~(1 << v0)
                for x in iter_bits(adj[y] & higher & ~pmask):
                    if adj[x] & inner:
                        continue
                    cbit = 0
                    if colours is not None:
                        cbit = 1 << colours[x]
                        if cmask & cbit:
                            continue
                    if counter is not None:
                        counter.tick()
                    if adj[x] >> v0 & 1:
                        # closing vertex; x > v1 keeps one of the two orientations
                        if len(path) >= 3 and x > path[1]:
                            yield (*path, x)
                        continue
                    path.append(x)
                    yield from grow(pmask | 1 << x, cmask | cbit)
                    path.pop()

            cmask = 0 if colours is None else (1 << colours[v0]) | (1 << colours[v1])
            yield from grow((1 << v0) | (1 << v1), cmask)


def find_rainbow_hole(g: Graph, c: Colouring, budget: int | None = None) -> HoleWitness | None:
    _check_colouring(g, c)
    for hole in iter_holes(g, c.dense(), NodeCounter(budget)):
        return HoleWitness(hole)
    return None


def find_hole(g: Graph, budget: int | None = None) -> HoleWitness | None:
    for hole in iter_holes(g, None, NodeCounter(budget)):
        return HoleWitness(hole)
    return None


def rainbow_run_start(c: Colouring, hole: Sequence[int], s: int) -> int | None:
    """First index ``i`` where ``s`` cyclically consecutive hole vertices are rainbow."""
    k = len(hole)
    if s > k:
        return None
    for i in range(k):
        if is_rainbow(c, [hole[(i + j) % k] for j in range(s)]):
            return i
    return None


def find_hole_with_rainbow_run(
    g: Graph, c: Colouring, s: int, budget: int | None = None
) -> tuple[HoleWitness, int] | None:
    """First hole having ``s`` cyclically consecutive vertices of distinct colours."""
    if s < 2:
        raise ValueError("s must be at least 2")
    _check_colouring(g, c)
    for hole in iter_holes(g, None, NodeCounter(budget)):
        start = rainbow_run_start(c, hole, s)
        if start is not None:
            return HoleWitness(hole), start
    return None


def validate_rainbow_path(g: Graph, c: Colouring, vertices: Sequence[int]) -> bool:
    return is_induced_path(g, vertices) and is_rainbow(c, vertices)


def find_locally_rainbow_hole(
    g: Graph, c: Colouring, s: int, budget: int | None = None
) -> HoleWitness | None:
    """First hole in which *every* window of ``s`` cyclically consecutive vertices is rainbow."""
    if s < 2:
        raise ValueError("s must be at least 2")
    _check_colouring(g, c)
    for hole in iter_holes(g, None, NodeCounter(budget)):
        k = len(hole)
        if s > k:
            continue
        if all(is_rainbow(c, [hole[(i + j) % k] for j in range(s)]) for i in range(k)):
            return HoleWitness(hole)
    return None
