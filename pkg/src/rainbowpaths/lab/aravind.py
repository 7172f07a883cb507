"""Exhaustive check that every proper colouring has a rainbow induced t-vertex path.

Colourings are explored as restricted growth strings over a search order of
the vertices.  As soon as the coloured prefix contains a rainbow induced
``t``-vertex path the whole subtree is discarded: extending a colouring
cannot destroy such a path.  A leaf that survives is a counterexample.

Long runs are resumable.  The work is a list of subtree tasks, each a fixed
root prefix plus the next node to visit; a checkpoint file stores the pending
tasks and the running statistics.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from ..graph import Colouring, ColourPartition, Graph
from ..paths import find_rainbow_induced_path
from . import _kernel
from .partitions import enumerate_colour_partitions

log = logging.getLogger(__name__)

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass
class Task:
    root: tuple[int, ...]
    frontier: tuple[int, ...]

    def encode(self) -> str:
        rest = self.frontier[len(self.root):]
        return "".join(DIGITS[x] for x in self.root) + "|" + "".join(DIGITS[x] for x in rest)

    @classmethod
    def decode(cls, line: str) -> "Task":
        root, _, rest = line.strip().partition("|")
        root_t = tuple(DIGITS.index(ch) for ch in root)
        return cls(root_t, root_t + tuple(DIGITS.index(ch) for ch in rest))


@dataclass
class CounterexampleReport:
    graph_digest: str
    partition: ColourPartition
    t: int
    nodes: int
    prunes: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "graph": self.graph_digest,
            "t": self.t,
            "blocks": [list(b) for b in self.partition.blocks],
            "colouring": list(self.partition.to_colouring()),
            "nodes": self.nodes,
            "prunes": self.prunes,
            "elapsed": self.elapsed,
        }


@dataclass
class AravindResult:
    verdict: str  # "holds", "counterexample" or "budget-exhausted"
    t: int
    nodes: int
    prunes: int
    elapsed: float
    order: list[int]
    counterexample: CounterexampleReport | None = None
    pending: list[Task] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "t": self.t, "nodes": self.nodes,
               "prunes": self.prunes, "elapsed": self.elapsed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        if self.pending:
            out["pending"] = len(self.pending)
        return out


def search_order(g: Graph) -> list[int]:
    """Vertices ordered so each has as many earlier neighbours as possible.

    Rainbow paths then appear in short prefixes, which is what the pruning
    feeds on.
    """
    if g.n == 0:
        return []
    deg = g.degrees()
    order = [max(range(g.n), key=lambda v: (deg[v], -v))]
    placed = 1 << order[0]
    while len(order) < g.n:
        v = max((u for u in range(g.n) if not placed >> u & 1),
                key=lambda u: ((g.adj[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
    return order


def _adjacency(h: Graph) -> np.ndarray:
    return np.array(h.adj, dtype=np.int64)


def _split(adj: np.ndarray, t: int, depth: int) -> tuple[list[tuple[int, ...]], int, int]:
    """Surviving prefixes of length ``depth`` (< n), with node and prune counts."""
    n = adj.shape[0]
    a = np.zeros(n, np.int64)
    blocks = [0] * (n + 1)
    out: list[tuple[int, ...]] = []
    nodes = prunes = 0

    def place(k: int, used: int) -> None:
        nonlocal nodes, prunes
        for b in range(used + 1):
            if blocks[b] & int(adj[k]):
                continue
            nodes += 1
            a[k] = b
            if _kernel.path_through(adj, a, (1 << (k + 1)) - 1, k, t):
                prunes += 1
                continue
            if k + 1 == depth:
                out.append(tuple(int(x) for x in a[: k + 1]))
                continue
            blocks[b] |= 1 << k
            place(k + 1, max(used, b + 1))
            blocks[b] &= ~(1 << k)

    place(0, 0)
    return out, nodes, prunes


def _run_task(adj: np.ndarray, t: int, task: Task, max_nodes: int):
    n = adj.shape[0]
    a = np.zeros(n, np.int64)
    k = len(task.frontier) - 1
    a[:k] = task.frontier[:k]
    status, nodes, prunes, k2, b2 = _kernel.search(
        adj, t, a, k, task.frontier[-1], len(task.root), max_nodes)
    frontier = None
    if status == _kernel.BUDGET:
        frontier = tuple(int(x) for x in a[:k2]) + (int(b2),)
    full = tuple(int(x) for x in a) if status == _kernel.COUNTEREXAMPLE else None
    return int(status), int(nodes), int(prunes), frontier, full


def _run_task_packed(args):
    return _run_task(*args)


def write_checkpoint(path: Path, g: Graph, t: int, order: Sequence[int], tasks: Sequence[Task],
                     nodes: int, prunes: int, elapsed: float) -> None:
    lines = [
        "# rainbowpaths aravind checkpoint",
        f"# graph={g.digest()}",
        f"# t={t}",
        "# order=" + ",".join(map(str, order)),
        f"# nodes={nodes}",
        f"# prunes={prunes}",
        f"# elapsed={elapsed:.3f}",
    ]
    lines += [task.encode() for task in tasks]
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    os.replace(tmp, path)


def read_checkpoint(path: Path) -> tuple[dict[str, str], list[Task]]:
    stats: dict[str, str] = {}
    tasks = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, eq, value = line[1:].strip().partition("=")
            if eq:
                stats[key] = value
        elif line.strip():
            tasks.append(Task.decode(line))
    return stats, tasks


def _verify_counterexample(g: Graph, order: list[int], full: tuple[int, ...], t: int) -> ColourPartition:
    colours = [0] * g.n
    for i, v in enumerate(order):
        colours[v] = full[i] + 1
    partition = ColourPartition.from_colouring(colours)
    assert partition.is_valid_for(g), "kernel produced an improper colouring"
    assert find_rainbow_induced_path(g, partition.to_colouring(), t) is None, \
        "kernel reported a colouring that has a rainbow induced path"
    return partition


def check_aravind(
    g: Graph,
    t: int,
    budget: int | None = None,
    *,
    jobs: int = 1,
    split_depth: int | None = None,
    order: Sequence[int] | None = None,
    checkpoint: str | os.PathLike | None = None,
    chunk: int = 10_000_000,
) -> AravindResult:
    """Decide whether every proper colouring of ``g`` has a rainbow induced ``t``-vertex path.

    ``budget`` caps the number of search nodes (valid partial colourings).
    With ``checkpoint`` the pending work is written after every chunk and an
    existing file for the same graph and ``t`` is resumed.  With ``jobs > 1``
    the tree is split at ``split_depth`` and subtrees run in worker
    processes; the verdict and any reported counterexample do not depend on
    ``jobs``.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > _kernel.MAX_VERTICES:
        raise ValueError(f"at most {_kernel.MAX_VERTICES} vertices supported")
    if budget is not None and budget < 1:
        raise ValueError("budget must be positive")

    start = time.perf_counter()
    order = list(order) if order is not None else search_order(g)
    adj = _adjacency(g.relabel(order))
    nodes = prunes = 0
    prior_elapsed = 0.0
    cp = Path(checkpoint) if checkpoint is not None else None

    if cp is not None and cp.exists():
        stats, tasks = read_checkpoint(cp)
        if stats.get("graph") != g.digest() or int(stats.get("t", -1)) != t:
            raise ValueError(f"checkpoint {cp} belongs to a different graph or t")
        order = [int(x) for x in stats["order"].split(",")]
        adj = _adjacency(g.relabel(order))
        nodes, prunes = int(stats["nodes"]), int(stats["prunes"])
        prior_elapsed = float(stats.get("elapsed", 0.0))
        log.info("resuming %s: %d tasks pending, %d nodes done", cp, len(tasks), nodes)
    elif jobs > 1:
        depth = min(split_depth or 8, g.n - 1)
        if depth < 1:
            tasks = [Task((), (0,))]
        else:
            prefixes, nodes, prunes = _split(adj, t, depth)
            tasks = [Task(p, p + (0,)) for p in prefixes]
    else:
        tasks = [Task((), (0,))]

    def elapsed() -> float:
        return prior_elapsed + time.perf_counter() - start

    def save() -> None:
        if cp is not None:
            write_checkpoint(cp, g, t, order, tasks, nodes, prunes, elapsed())

    found_full: tuple[int, ...] | None = None
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while tasks:
            remaining = None if budget is None else budget - nodes
            if remaining is not None and remaining <= 0:
                break
            active = tasks[: max(jobs, 1)]
            per_task = chunk if remaining is None else max(1, min(chunk, remaining // len(active)))
            args = [(adj, t, task, per_task) for task in active]
            results = list(pool.map(_run_task_packed, args)) if pool else [_run_task(*args[0])]
            finished = set()
            first_cx = None
            for i, (status, n_nodes, n_prunes, frontier, full) in enumerate(results):
                nodes += n_nodes
                prunes += n_prunes
                if status == _kernel.BUDGET:
                    active[i].frontier = frontier
                    continue
                finished.add(i)
                if status == _kernel.COUNTEREXAMPLE and first_cx is None:
                    first_cx = i
                    found_full = full
            # active tasks are a prefix of the lexicographically ordered task
            # list, so later tasks cannot hold an earlier counterexample
            keep = tasks if first_cx is None else tasks[:first_cx]
            tasks = [task for i, task in enumerate(keep) if i not in finished]
            save()
            log.info("%d nodes, %d prunes, %d tasks pending", nodes, prunes, len(tasks))
    finally:
        if pool is not None:
            pool.shutdown()

    result = AravindResult("holds", t, nodes, prunes, elapsed(), order)
    if found_full is not None:
        partition = _verify_counterexample(g, order, found_full, t)
        result.verdict = "counterexample"
        result.counterexample = CounterexampleReport(
            g.digest(), partition, t, nodes, prunes, result.elapsed)
        result.pending = tasks
    elif tasks:
        result.verdict = "budget-exhausted"
        result.pending = tasks
    return result


def check_aravind_unpruned(g: Graph, t: int) -> tuple[str, ColourPartition | None]:
    """Reference verdict by plain enumeration of all colour partitions."""
    for partition in enumerate_colour_partitions(g):
        if find_rainbow_induced_path(g, partition.to_colouring(), t) is None:
            return "counterexample", partition
    return "holds", None


def colouring_from_partition(p: ColourPartition) -> Colouring:
    return p.to_colouring()
