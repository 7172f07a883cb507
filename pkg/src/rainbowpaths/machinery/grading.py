"""Gradings and the later-neighbour witness search, direct and proof-following."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..graph import (
    Colouring,
    ColourPartition,
    Graph,
    PathWitness,
    _check_colouring,
    induced_subgraph,
    is_rainbow,
    iter_bits,
    to_mask,
)
from ..invariants import chromatic_number
from .grs import BicliqueWitness, grs_dichotomy, validate_biclique
from .orientation import longest_directed_path, orient_by_colour


@dataclass(frozen=True)
class Grading:
    """Ordered disjoint blocks covering V(G), each certified ``w``-colourable.

    Blocks may be empty.  ``certificates[i]`` partitions ``blocks[i]`` into at
    most ``w`` independent sets (in original vertex labels).
    """

    blocks: tuple[tuple[int, ...], ...]
    w: int
    certificates: tuple[ColourPartition, ...]

    @classmethod
    def build(cls, g: Graph, blocks: Iterable[Iterable[int]], w: int | None = None) -> "Grading":
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        certs = []
        for block in blocks:
            sub, index = induced_subgraph(g, block)
            _, part = chromatic_number(sub)
            certs.append(ColourPartition([index[v] for v in b] for b in part.blocks))
        needed = max((len(p) for p in certs), default=0)
        if w is None:
            w = needed
        elif needed > w:
            raise ValueError(f"a block needs {needed} colours but w={w}")
        grading = cls(blocks, w, tuple(certs))
        grading.validate(g)
        return grading

    def block_of(self) -> dict[int, int]:
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    def validate(self, g: Graph) -> None:
        seen = 0
        for block, cert in zip(self.blocks, self.certificates, strict=True):
            mask = to_mask(block)
            if mask & seen:
                raise ValueError("grading blocks overlap")
            seen |= mask
            if len(cert) > self.w:
                raise ValueError(f"certificate uses {len(cert)} > w={self.w} classes")
            if sorted(v for b in cert.blocks for v in b) != list(block):
                raise ValueError("certificate does not partition its block")
            for cls_ in cert.blocks:
                cmask = to_mask(cls_)
                if any(g.adj[v] & cmask for v in cls_):
                    raise ValueError("certificate class is not independent")
        if seen != (1 << g.n) - 1:
            raise ValueError("grading blocks do not cover the vertex set")


@dataclass(frozen=True)
class GradingWitness:
    block: int
    vertex: int
    later: tuple[int, ...]

    def to_json(self) -> dict:
        return {"block": self.block, "vertex": self.vertex, "later": list(self.later)}


def validate_grading_witness(
    g: Graph, c: Colouring, grading: Grading, w: GradingWitness, s: int
) -> None:
    where = grading.block_of()
    assert where[w.vertex] == w.block, "vertex is not in the named block"
    assert len(w.later) == s and len(set(w.later)) == s, "need s distinct vertices"
    for x in w.later:
        assert where[x] > w.block, f"{x} is not later than {w.vertex}"
        assert g.has_edge(w.vertex, x), f"{x} is not adjacent to {w.vertex}"
    assert is_rainbow(c, w.later), "later vertices share a colour"


def grading_lemma_search(g: Graph, c: Colouring, grading: Grading, s: int) -> GradingWitness | None:
    """First vertex (block order, then vertex order) with ``s`` differently
    coloured later neighbours; one neighbour per colour, lowest first."""
    if s < 1:
        raise ValueError("s must be at least 1")
    _check_colouring(g, c)
    later = 0
    suffix = []
    for block in reversed(grading.blocks):
        suffix.append(later)
        later |= to_mask(block)
    suffix.reverse()
    for i, block in enumerate(grading.blocks):
        for v in block:
            picked: dict[int, int] = {}
            for u in iter_bits(g.adj[v] & suffix[i]):
                picked.setdefault(c[u], u)
                if len(picked) == s:
                    return GradingWitness(i, v, tuple(sorted(picked.values())))
    return None


@dataclass
class LemmaRun:
    """Outcome of the proof-following construction.

    ``failed_step`` names the step that could not be carried out, or is
    ``None`` when a witness was produced.  ``induced_path`` is set when the
    dichotomy step produced a rainbow induced s-vertex path, which voids the
    lemma's hypothesis.
    """

    witness: GradingWitness | None
    steps: list[dict] = field(default_factory=list)
    failed_step: str | None = None
    induced_path: PathWitness | None = None

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json() if self.witness else None,
            "failed_step": self.failed_step,
            "induced_path": self.induced_path.to_json() if self.induced_path else None,
            "steps": self.steps,
        }


def refine_classes(grading: Grading) -> list[list[int]]:
    """Sets ``A_1..A_w``: class ``j`` of every block certificate, merged."""
    classes: list[list[int]] = [[] for _ in range(grading.w)]
    for cert in grading.certificates:
        for j, cls_ in enumerate(cert.blocks):
            classes[j].extend(cls_)
    return [sorted(a) for a in classes]


def grading_lemma_constructive(
    g: Graph,
    c: Colouring,
    grading: Grading,
    s: int,
    r: int,
    budget: int | None = None,
) -> LemmaRun:
    """Follow the proof of the grading lemma step by step.

    Steps: merge the block certificates into classes ``A_j``; take the class
    of largest chromatic number (it must reach ``r``); orient it by colour and
    extract a longest monotone path; run the dichotomy search on the path's
    vertex set; from a rainbow ``K_{s,s}`` take the earliest vertex and its
    opposite side.
    """
    if s < 1 or r < 1:
        raise ValueError("s and r must be at least 1")
    _check_colouring(g, c)
    grading.validate(g)
    run = LemmaRun(None)
    chi, _ = chromatic_number(g, budget)
    ok = chi >= grading.w * r
    run.steps.append({"step": "precondition", "chi": chi, "w": grading.w, "r": r, "ok": ok})
    if not ok:
        run.failed_step = "precondition"
        return run

    classes = refine_classes(grading)
    chis = [chromatic_number(induced_subgraph(g, a)[0], budget)[0] for a in classes]
    j = max(range(len(chis)), key=lambda k: (chis[k], -k))
    ok = chis[j] >= r
    run.steps.append({"step": "colour-class", "class_chi": chis, "chosen": j, "ok": ok})
    if not ok:
        run.failed_step = "colour-class"
        return run

    sub, index = induced_subgraph(g, classes[j])
    sub_c = Colouring(c[v] for v in index)
    mono = longest_directed_path(orient_by_colour(sub, sub_c))
    path = [index[v] for v in mono.vertices]
    ok = len(path) >= r
    run.steps.append({"step": "monotone-path", "path": path, "ok": ok})
    if not ok:
        run.failed_step = "monotone-path"
        return run

    psub, pindex = induced_subgraph(g, path)
    found = grs_dichotomy(psub, s, budget)
    if isinstance(found, PathWitness):
        induced = PathWitness(tuple(pindex[v] for v in found.vertices), induced=True, rainbow=True)
        run.induced_path = induced
        run.failed_step = "hypothesis"
        run.steps.append({"step": "dichotomy", "outcome": "induced-path",
                          "path": list(induced.vertices), "ok": False})
        return run
    if found is None:
        run.failed_step = "dichotomy"
        run.steps.append({"step": "dichotomy", "outcome": "neither", "ok": False})
        return run
    left, right = (tuple(pindex[v] for v in side) for side in found.sides)
    biclique = BicliqueWitness((left, right), rainbow=True)
    validate_biclique(g, biclique, c)
    run.steps.append({"step": "dichotomy", "outcome": "biclique",
                      "sides": [list(left), list(right)], "ok": True})

    where = grading.block_of()
    i = min(where[v] for v in biclique.vertices())
    v = min(x for x in biclique.vertices() if where[x] == i)
    others = right if v in left else left
    run.witness = GradingWitness(i, v, tuple(sorted(others)))
    run.steps.append({"step": "earliest-vertex", "block": i, "vertex": v,
                      "later": list(run.witness.later), "ok": True})
    return run


def grading_from_sets(n: int, sets: Sequence[Iterable[int]]) -> list[list[int]]:
    """Blocks ``W_i = S_i minus (S_1 u ... u S_{i-1})``, with leftovers appended."""
    seen = 0
    blocks = []
    for s_ in sets:
        mask = to_mask(s_) & ~seen
        blocks.append(list(iter_bits(mask)))
        seen |= mask
    rest = ((1 << n) - 1) & ~seen
    if rest:
        blocks.append(list(iter_bits(rest)))
    return blocks
