"""Core graph, colouring and witness types.

Graphs are simple and undirected over vertices ``0..n-1``.  Adjacency is kept
as one Python ``int`` bitset per vertex, so neighbourhood intersections are a
single ``&``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BudgetExhausted(RuntimeError):
    """A search ran out of node budget before reaching a verdict."""

    def __init__(self, nodes: int, message: str | None = None):
        super().__init__(message or f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class NodeCounter:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit < 0:
            raise ValueError("budget must be non-negative")
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(self.limit)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph with bitset adjacency."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        return Graph(self.n, [to_mask(pos[u] for u in iter_bits(self.adj[v])) for v in order])

    def digest(self) -> str:
        text = f"{self.n} {self.m}\n" + "".join(f"{u} {v}\n" for u, v in self.edges())
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Colouring:
    """Vertex colouring ``colours[v]`` with positive integer colours.

    Colours need not be contiguous.  Properness is a property of the pair
    (graph, colouring) and is checked by :func:`is_proper`.
    """

    colours: tuple[int, ...]

    def __init__(self, colours: Iterable[int]):
        colours = tuple(int(c) for c in colours)
        for v, c in enumerate(colours):
            if c < 1:
                raise ValueError(f"colour of vertex {v} must be a positive integer, got {c}")
        object.__setattr__(self, "colours", colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __len__(self) -> int:
        return len(self.colours)

    def __iter__(self):
        return iter(self.colours)

    def dense(self) -> list[int]:
        """Colours renumbered ``0..k-1`` in order of first appearance."""
        index: dict[int, int] = {}
        return [index.setdefault(c, len(index)) for c in self.colours]

    def num_colours(self) -> int:
        return len(set(self.colours))


@dataclass(frozen=True)
class ColourPartition:
    """A partition of the vertex set into blocks, canonically ordered.

    Each block is a sorted tuple and blocks are ordered by their smallest
    vertex, which is the restricted-growth-string order.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        canon = sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def from_colouring(cls, c: Colouring | Sequence[int]) -> "ColourPartition":
        groups: dict[int, list[int]] = {}
        for v, col in enumerate(c):
            groups.setdefault(col, []).append(v)
        return cls(groups.values())

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def to_colouring(self) -> Colouring:
        colours = [0] * self.n
        for i, block in enumerate(self.blocks):
            for v in block:
                colours[v] = i + 1
        return Colouring(colours)

    def rgs(self) -> tuple[int, ...]:
        """The restricted growth string, block index per vertex."""
        out = [0] * self.n
        for i, block in enumerate(self.blocks):
            for v in block:
                out[v] = i
        return tuple(out)

    def is_valid_for(self, g: Graph) -> bool:
        seen = 0
        for block in self.blocks:
            mask = to_mask(block)
            if mask & seen or any(g.adj[v] & mask for v in block):
                return False
            seen |= mask
        return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    induced: bool = True
    rainbow: bool = True

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "induced": self.induced, "rainbow": self.rainbow}


@dataclass(frozen=True)
class HoleWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices)}


def _check_vertices(g: Graph, xs: Iterable[int]) -> list[int]:
    xs = list(xs)
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return xs


def _check_colouring(g: Graph, c: Colouring) -> None:
    if len(c) != g.n:
        raise ValueError(f"colouring has {len(c)} entries but graph has {g.n} vertices")


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(g[xs], index)`` where ``index[i]`` is the original vertex of new vertex ``i``."""
    index = sorted(set(_check_vertices(g, xs)))
    pos = {v: i for i, v in enumerate(index)}
    mask = to_mask(index)
    adj = [to_mask(pos[u] for u in iter_bits(g.adj[v] & mask)) for v in index]
    return Graph(len(index), adj), index


def is_proper(g: Graph, c: Colouring) -> bool:
    _check_colouring(g, c)
    return all(c[u] != c[v] for u, v in g.edges())


def is_rainbow(c: Colouring, xs: Iterable[int]) -> bool:
    xs = list(xs)
    for v in xs:
        if not 0 <= v < len(c):
            raise ValueError(f"vertex {v} out of range for colouring of length {len(c)}")
    cols = [c[v] for v in set(xs)]
    return len(cols) == len(set(cols))


def is_induced_path(g: Graph, vertices: Sequence[int]) -> bool:
    """True iff ``vertices`` (in order) is an induced path of ``g``."""
    if len(set(vertices)) != len(vertices):
        return False
    for i, v in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if g.has_edge(v, vertices[j]) != (j == i + 1):
                return False
    return True


def is_hole(g: Graph, vertices: Sequence[int]) -> bool:
    k = len(vertices)
    if k < 4 or len(set(vertices)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(vertices[i], vertices[j]) != consecutive:
                return False
    return True


def validate_path_witness(g: Graph, c: Colouring | None, w: PathWitness) -> None:
    """Raise ``AssertionError`` unless ``w`` satisfies its flags against ``g`` and ``c``."""
    vs = w.vertices
    assert len(set(vs)) == len(vs), f"repeated vertex in {vs}"
    for a, b in zip(vs, vs[1:]):
        assert g.has_edge(a, b), f"{a}-{b} is not an edge"
    if w.induced:
        assert is_induced_path(g, vs), f"{vs} has a chord"
    if w.rainbow:
        assert c is not None and is_rainbow(c, vs), f"{vs} is not rainbow"


def validate_hole_witness(g: Graph, w: HoleWitness) -> None:
    assert is_hole(g, w.vertices), f"{w.vertices} is not a hole"
