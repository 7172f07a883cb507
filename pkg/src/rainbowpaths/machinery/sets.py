"""Reachability sets of rainbow induced paths and the proof-guided path search."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..graph import (
    Colouring,
    Graph,
    NodeCounter,
    PathWitness,
    _check_colouring,
    induced_subgraph,
    is_induced_path,
    is_proper,
    is_rainbow,
    iter_bits,
    to_mask,
)
from ..invariants import chromatic_number
from ..paths import iter_path_extensions
from .grading import grading_from_sets


def _require_proper(g: Graph, c: Colouring) -> None:
    _check_colouring(g, c)
    if not is_proper(g, c):
        raise ValueError("colouring is not proper")


def _require_rainbow_path(g: Graph, c: Colouring, q: Sequence[int]) -> None:
    if not q:
        raise ValueError("path must have at least one vertex")
    if not is_induced_path(g, q):
        raise ValueError(f"{tuple(q)} is not an induced path")
    if not is_rainbow(c, q):
        raise ValueError(f"{tuple(q)} is not rainbow")


def _vertices(q) -> tuple[int, ...]:
    return tuple(q.vertices) if isinstance(q, PathWitness) else tuple(q)


def compute_a_set(g: Graph, c: Colouring, z: int, budget: int | None = None) -> frozenset[int]:
    """Every ``v`` joined to ``z`` by a rainbow induced path (``z`` itself included)."""
    _require_proper(g, c)
    if not 0 <= z < g.n:
        raise ValueError(f"vertex {z} out of range")
    return _a_set(g, c.dense(), z, NodeCounter(budget))


def _a_set(g: Graph, dense: list[int], z: int, counter: NodeCounter) -> frozenset[int]:
    return frozenset(p[-1] for p in iter_path_extensions(g, (z,), dense, counter=counter))


def extension_candidates(g: Graph, c: Colouring, q) -> frozenset[int]:
    """Vertices adjacent to the last vertex of ``q``, to no other vertex of
    ``q``, and coloured differently from all of ``q``."""
    q = _vertices(q)
    _check_colouring(g, c)
    _require_rainbow_path(g, c, q)
    y = q[-1]
    pmask = to_mask(q)
    inner = pmask & ~(1 << y)
    used = {c[v] for v in q}
    out = frozenset(x for x in iter_bits(g.adj[y] & ~pmask)
                    if not g.adj[x] & inner and c[x] not in used)
    for x in out:
        assert is_induced_path(g, q + (x,)) and is_rainbow(c, q + (x,))
    return out


def compute_b_set(g: Graph, c: Colouring, q, budget: int | None = None) -> frozenset[int]:
    """Far ends of all proper extensions of ``q`` (rainbow induced paths with ``q`` as a prefix)."""
    q = _vertices(q)
    _require_proper(g, c)
    _require_rainbow_path(g, c, q)
    return _b_set(g, c.dense(), q, NodeCounter(budget))


def _b_set(g: Graph, dense: list[int], q: tuple[int, ...], counter: NodeCounter) -> frozenset[int]:
    return frozenset(p[-1] for p in iter_path_extensions(g, q, dense, counter=counter) if len(p) > len(q))


def _chi_of(g: Graph, xs, budget: int | None) -> int:
    if not xs:
        return 0
    return chromatic_number(induced_subgraph(g, xs)[0], budget)[0]


def proof_guided_search(
    g: Graph,
    c: Colouring,
    s: int,
    r_table: Mapping[int, int] | None = None,
    budget: int | None = None,
) -> tuple[PathWitness | None, list[dict]]:
    """Look for a rainbow induced ``s``-vertex path the way the main proof does.

    Start vertices are tried in decreasing order of chromatic number of their
    reachable set, and candidate extensions in decreasing order of the
    chromatic number of their own extension sets.  Backtracking makes the
    search complete, so ``None`` means no such path exists.  This is a
    search strategy, not the proof's bound.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    _require_proper(g, c)
    dense = c.dense()
    counter = NodeCounter(budget)
    steps: list[dict] = []

    reach = {z: _a_set(g, dense, z, counter) for z in range(g.n)}
    chis = {z: _chi_of(g, reach[z], budget) for z in range(g.n)}
    starts = sorted(range(g.n), key=lambda z: (-chis[z], z))
    steps.append({"step": "reach-sets", "chi": [chis[z] for z in range(g.n)], "order": starts})

    blocks = grading_from_sets(g.n, [sorted(reach[z]) for z in range(g.n)])
    block_chi = max((_chi_of(g, b, budget) for b in blocks), default=0)
    r = (r_table or {}).get(s)
    entry = {"step": "reach-grading", "w": block_chi, "r": r}
    if r is not None:
        entry["grading_lemma_applies"] = chromatic_number(g, budget)[0] >= block_chi * r
    steps.append(entry)

    def grow(q: tuple[int, ...]) -> PathWitness | None:
        if len(q) == s:
            return PathWitness(q)
        counter.tick()
        scored = []
        for v in sorted(extension_candidates(g, c, q)):
            qv = q + (v,)
            if len(qv) == s:
                steps.append({"step": "extend", "path": list(qv), "done": True})
                return PathWitness(qv)
            b = _b_set(g, dense, qv, counter)
            if b:
                scored.append((-_chi_of(g, b, budget), v, qv))
        for neg_chi, v, qv in sorted(scored):
            steps.append({"step": "extend", "path": list(qv), "chi_b": -neg_chi})
            found = grow(qv)
            if found:
                return found
        return None

    for z in starts:
        found = grow((z,))
        if found:
            return found, steps
    steps.append({"step": "exhausted"})
    return None, steps
