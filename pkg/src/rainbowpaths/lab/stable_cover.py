"""Induced paths whose vertices each own a private set of a stable cover."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..graph import Colouring, Graph, NodeCounter, PathWitness, iter_bits, to_mask


@dataclass(frozen=True)
class StableCover:
    """A family of independent sets whose union is V(G); sets may overlap."""

    family: tuple[tuple[int, ...], ...]

    def __init__(self, family: Iterable[Iterable[int]]):
        object.__setattr__(self, "family", tuple(tuple(sorted(x)) for x in family))

    @classmethod
    def from_colouring(cls, c: Colouring) -> "StableCover":
        groups: dict[int, list[int]] = {}
        for v, col in enumerate(c):
            groups.setdefault(col, []).append(v)
        return cls(groups[k] for k in sorted(groups))

    def validate(self, g: Graph) -> None:
        union = 0
        for x in self.family:
            mask = to_mask(x)
            if mask >> g.n:
                raise ValueError(f"set {x} has vertices out of range")
            if any(g.adj[v] & mask for v in x):
                raise ValueError(f"set {x} is not independent")
            union |= mask
        if union != (1 << g.n) - 1:
            raise ValueError("cover does not cover every vertex")


@dataclass(frozen=True)
class CoverPathWitness:
    path: PathWitness
    private: tuple[int, ...]  # index into the cover family, one per path vertex

    def to_json(self) -> dict:
        return {"path": self.path.to_json(), "private": list(self.private)}


def search_stable_cover_path(
    g: Graph, cover: StableCover, s: int, budget: int | None = None
) -> CoverPathWitness | None:
    """First induced ``s``-vertex path in which each vertex ``v`` lies in some
    cover set meeting the path only in ``v``.

    The private-set condition can only fail more as the path grows, so a
    partial path that breaks it is pruned.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    cover.validate(g)
    masks = [to_mask(x) for x in cover.family]
    containing: list[list[int]] = [[] for _ in range(g.n)]
    for i, x in enumerate(cover.family):
        for v in x:
            containing[v].append(i)
    counter = NodeCounter(budget)
    adj = g.adj

    def grow(path: list[int], pmask: int, private: list[list[int]]) -> CoverPathWitness | None:
        if len(path) == s:
            return CoverPathWitness(PathWitness(tuple(path), induced=True, rainbow=False),
                                    tuple(p[0] for p in private))
        y = path[-1]
        inner = pmask & ~(1 << y)
        for x in iter_bits(adj[y] & ~pmask):
            if adj[x] & inner:
                continue
            counter.tick()
            new_mask = pmask | 1 << x
            new_private = []
            for u, options in zip(path + [x], private + [containing[x]]):
                keep = [i for i in options if masks[i] & new_mask == 1 << u]
                if not keep:
                    break
                new_private.append(keep)
            else:
                path.append(x)
                found = grow(path, new_mask, new_private)
                path.pop()
                if found:
                    return found
        return None

    for start in range(g.n):
        found = grow([start], 1 << start, [containing[start]])
        if found:
            return found
    return None
