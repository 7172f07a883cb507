"""Induced-path versus K_{s,s} dichotomy search."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Colouring, Graph, NodeCounter, PathWitness, is_rainbow, iter_bits
from ..paths import iter_path_extensions


@dataclass(frozen=True)
class BicliqueWitness:
    sides: tuple[tuple[int, ...], tuple[int, ...]]
    rainbow: bool = False

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.sides[0] + self.sides[1]))

    def to_json(self) -> dict:
        return {"sides": [list(self.sides[0]), list(self.sides[1])], "rainbow": self.rainbow}


def validate_biclique(g: Graph, w: BicliqueWitness, c: Colouring | None = None) -> None:
    left, right = w.sides
    assert len(left) == len(right), "sides differ in size"
    assert not set(left) & set(right), "sides overlap"
    assert len(set(left)) == len(left) and len(set(right)) == len(right)
    for a in left:
        for b in right:
            assert g.has_edge(a, b), f"{a}-{b} missing from biclique"
    if w.rainbow:
        assert c is not None and is_rainbow(c, w.vertices()), "biclique is not rainbow"


def find_biclique(g: Graph, s: int, counter: NodeCounter | None = None) -> BicliqueWitness | None:
    """First ``K_{s,s}`` subgraph (not necessarily induced), side A lexicographically least."""
    if s < 1:
        raise ValueError("s must be at least 1")
    counter = counter or NodeCounter()
    full = (1 << g.n) - 1

    def grow(side: list[int], common: int, start: int) -> BicliqueWitness | None:
        if len(side) == s:
            others = []
            for b in iter_bits(common):
                others.append(b)
                if len(others) == s:
                    break
            return BicliqueWitness((tuple(side), tuple(others)))
        for a in range(start, g.n):
            nxt = common & g.adj[a]
            if nxt.bit_count() < s:
                continue
            counter.tick()
            side.append(a)
            found = grow(side, nxt, a + 1)
            side.pop()
            if found:
                return found
        return None

    return grow([], full, 0)


def grs_dichotomy(g: Graph, s: int, budget: int | None = None) -> PathWitness | BicliqueWitness | None:
    """Search for an induced path on ``s`` vertices, else a ``K_{s,s}`` subgraph.

    Returns ``None`` when the exhaustive search shows neither exists, and
    raises :class:`BudgetExhausted` when the budget runs out first.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    counter = NodeCounter(budget)
    for start in range(g.n):
        for p in iter_path_extensions(g, (start,), None, max_len=s, counter=counter):
            if len(p) == s:
                return PathWitness(p, induced=True, rainbow=False)
    return find_biclique(g, s, counter)
