"""Proper colourings up to renaming, as partitions into independent sets."""

from __future__ import annotations

from typing import Iterator

from ..graph import ColourPartition, Graph


def enumerate_colour_partitions(g: Graph) -> Iterator[ColourPartition]:
    """Every partition of V(g) into independent sets, exactly once.

    Order is that of restricted growth strings over vertices ``0..n-1``:
    vertex ``v`` joins an existing block (lowest first) or opens a new one.
    """
    n = g.n
    masks: list[int] = []
    members: list[list[int]] = []

    def place(v: int) -> Iterator[ColourPartition]:
        if v == n:
            yield ColourPartition(members)
            return
        bit = 1 << v
        for i in range(len(masks)):
            if g.adj[v] & masks[i]:
                continue
            masks[i] |= bit
            members[i].append(v)
            yield from place(v + 1)
            members[i].pop()
            masks[i] &= ~bit
        masks.append(bit)
        members.append([v])
        yield from place(v + 1)
        masks.pop()
        members.pop()

    yield from place(0)


def count_colour_partitions(g: Graph) -> int:
    return sum(1 for _ in enumerate_colour_partitions(g))
