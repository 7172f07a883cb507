"""Named experiments producing JSON reports.

Every CLI subcommand ends up here.  A report carries the experiment name,
package version, input digests, parameters, the result with full witness
data, a verdict and wall time.  Timing lives only under ``elapsed`` keys, so
two runs of one config differ in nothing else.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import generators as gen
from .graph import BudgetExhausted, Colouring, Graph, is_proper
from .invariants import chromatic_number, clique_number, dsatur_colouring, girth
from .io import format_colouring, read_colouring, read_graph
from .lab import (
    StableCover,
    check_aravind,
    first_non_monotone_rainbow_3path,
    search_stable_cover_path,
    verify_rainbow_max_degree,
)
from .machinery import (
    DEFAULT_R_TABLE,
    Grading,
    compute_a_set,
    compute_b_set,
    constants_table,
    extension_candidates,
    grading_lemma_constructive,
    grading_lemma_search,
    grs_dichotomy,
    longest_directed_path,
    orient_by_colour,
    proof_guided_search,
)
from .paths import (
    find_hole_with_rainbow_run,
    find_locally_rainbow_hole,
    find_rainbow_hole,
    find_rainbow_induced_path,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2

RANDOM_FAMILIES = {"random_triangle_free", "random"}


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    name: str
    graph: str | None = None  # "family:NAME:P1,P2" or a file path
    colouring: str | None = None  # file path, "middle", "greedy" or "enumerate"
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None

    def validate(self) -> None:
        if self.name not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.name!r}")
        if self.graph and not self.graph.startswith("family:") and not Path(self.graph).exists():
            raise ConfigError(f"graph file {self.graph} does not exist")
        if self.colouring and self.colouring not in ("middle", "greedy", "enumerate") \
                and not Path(self.colouring).exists():
            raise ConfigError(f"colouring file {self.colouring} does not exist")
        budget = self.params.get("budget")
        if budget is not None and int(budget) <= 0:
            raise ConfigError("budget must be positive")
        if self.graph and self.graph.startswith("family:"):
            family = self.graph.split(":")[1]
            if family in RANDOM_FAMILIES and self.seed is None:
                raise ConfigError(f"family {family} is randomised; a seed is required")
        if self.name in SEEDED and self.seed is None:
            raise ConfigError(f"experiment {self.name} needs a seed")

    def to_json(self) -> dict:
        return {"graph": self.graph, "colouring": self.colouring, "params": self.params, "seed": self.seed}


def family_graph(spec: str, seed: int | None = None) -> tuple[Graph, list | None]:
    """Build a graph from ``NAME`` or ``NAME:P1,P2,...``; returns the triple mapping for shift graphs."""
    name, _, rest = spec.partition(":")
    params = [p for p in rest.split(",") if p] if rest else []
    if name == "shift":
        g, triples = gen.shift_graph_triples(int(params[0]))
        return g, triples
    if name in RANDOM_FAMILIES:
        if seed is None:
            raise ConfigError(f"family {name} needs --seed")
        params = params + [str(seed)]
    return gen.standard_family(name, *params), None


def load_graph(cfg: ExperimentConfig) -> tuple[Graph, list | None]:
    if cfg.graph is None:
        raise ConfigError(f"experiment {cfg.name} needs a graph")
    if cfg.graph.startswith("family:"):
        try:
            return family_graph(cfg.graph[len("family:"):], cfg.seed)
        except (ValueError, IndexError) as exc:
            raise ConfigError(str(exc)) from exc
    try:
        return read_graph(cfg.graph), None
    except ValueError as exc:
        raise ConfigError(f"{cfg.graph}: {exc}") from exc


def load_colouring(cfg: ExperimentConfig, g: Graph, triples) -> Colouring:
    src = cfg.colouring
    if src is None:
        raise ConfigError(f"experiment {cfg.name} needs a colouring")
    if src == "middle":
        if triples is None:
            raise ConfigError("middle colouring needs a shift graph family")
        return gen.middle_element_colouring(triples)
    if src == "greedy":
        return Colouring(x + 1 for x in dsatur_colouring(g))
    if src == "enumerate":
        raise ConfigError(f"experiment {cfg.name} takes a single colouring, not 'enumerate'")
    try:
        c = read_colouring(src, g.n)
    except ValueError as exc:
        raise ConfigError(f"{src}: {exc}") from exc
    if not is_proper(g, c):
        raise ConfigError("colouring is not proper")
    return c


def _digest_colouring(c: Colouring) -> str:
    return hashlib.sha256(format_colouring(c).encode()).hexdigest()[:16]


_REQUIRED = object()


def _param(cfg: ExperimentConfig, key: str, default=_REQUIRED, kind=int):
    value = cfg.params.get(key)
    if value is None:
        if default is _REQUIRED:
            raise ConfigError(f"experiment {cfg.name} needs parameter {key}")
        return default
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError(f"parameter {key} must be {kind.__name__}") from None


def _witness(w) -> Any:
    return None if w is None else w.to_json()


# --- experiments -----------------------------------------------------------
# Each takes the config plus a dict to fill with input digests and returns
# (result, verdict).  A verdict of "budget-exhausted" maps to exit code 2.


def _analyze(cfg, inputs):
    g, _ = load_graph(cfg)
    inputs["graph"] = g.digest()
    budget = _param(cfg, "budget", None)
    chi, part = chromatic_number(g, budget)
    omega, clique = clique_number(g, budget)
    return {"n": g.n, "m": g.m, "chi": chi, "omega": omega, "girth": girth(g),
            "colour_classes": [list(b) for b in part.blocks], "max_clique": list(clique)}, "computed"


def _mycielski_23(cfg, inputs):
    cfg.graph = "family:mycielski:2,cycle,5"
    return _analyze(cfg, inputs)


def _search(cfg, inputs):
    g, triples = load_graph(cfg)
    c = load_colouring(cfg, g, triples)
    inputs.update(graph=g.digest(), colouring=_digest_colouring(c))
    kind = cfg.params.get("kind", "path")
    budget = _param(cfg, "budget", None)
    if kind == "path":
        w = find_rainbow_induced_path(g, c, _param(cfg, "s"), budget)
        return {"kind": kind, "witness": _witness(w)}, "found" if w else "absent"
    if kind == "hole":
        w = find_rainbow_hole(g, c, budget)
        return {"kind": kind, "witness": _witness(w)}, "found" if w else "absent"
    if kind == "hole-run":
        found = find_hole_with_rainbow_run(g, c, _param(cfg, "s"), budget)
        out = None if found is None else {**found[0].to_json(), "start": found[1]}
        return {"kind": kind, "witness": out}, "found" if found else "absent"
    if kind == "local-hole":
        w = find_locally_rainbow_hole(g, c, _param(cfg, "s"), budget)
        return {"kind": kind, "witness": _witness(w)}, "found" if w else "absent"
    if kind == "stable-cover":
        w = search_stable_cover_path(g, StableCover.from_colouring(c), _param(cfg, "s"), budget)
        return {"kind": kind, "witness": _witness(w)}, "found" if w else "absent"
    raise ConfigError(f"unknown search kind {kind!r}")


def _machinery(cfg, inputs):
    op = cfg.params.get("op")
    steps: list = []
    if op == "constants":
        try:
            table = constants_table(_param(cfg, "s"), _param(cfg, "r"), _param(cfg, "c_prime"),
                                    _param(cfg, "kappa", None))
        except OverflowError as exc:
            return {"operation": op, "inputs_digest": None, "witness": None,
                    "steps": [{"step": "recursion", "error": str(exc)}]}, "overflow"
        return {"operation": op, "inputs_digest": None, "witness": table.to_json(), "steps": steps}, "computed"

    g, triples = load_graph(cfg)
    inputs["graph"] = g.digest()
    budget = _param(cfg, "budget", None)
    if op == "grs":
        w = grs_dichotomy(g, _param(cfg, "s"), budget)
        kind = "neither" if w is None else ("induced-path" if hasattr(w, "induced") else "biclique")
        return {"operation": op, "inputs_digest": g.digest(), "witness": _witness(w),
                "steps": [{"step": "dichotomy", "outcome": kind}]}, kind

    c = load_colouring(cfg, g, triples)
    inputs["colouring"] = _digest_colouring(c)
    digest = g.digest() + ":" + _digest_colouring(c)
    if op in ("orient", "longest-path"):
        o = orient_by_colour(g, c)
        steps.append({"step": "orient", "arcs": [list(a) for a in o.arcs], "acyclic": o.is_acyclic()})
        p = longest_directed_path(o)
        steps.append({"step": "longest-path", "colours": [c[v] for v in p.vertices]})
        return {"operation": op, "inputs_digest": digest, "witness": p.to_json(), "steps": steps}, "computed"
    if op == "a-set":
        z = _param(cfg, "z")
        a = sorted(compute_a_set(g, c, z, budget))
        return {"operation": op, "inputs_digest": digest, "witness": a, "steps": steps}, "computed"
    if op in ("b-set", "candidates"):
        q = [int(x) for x in str(cfg.params.get("q", "")).split(",") if x != ""]
        if not q:
            raise ConfigError(f"{op} needs --q with a comma-separated path")
        try:
            out = compute_b_set(g, c, q, budget) if op == "b-set" else extension_candidates(g, c, q)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return {"operation": op, "inputs_digest": digest, "witness": sorted(out), "steps": steps}, "computed"
    if op in ("grading-search", "grading-constructive"):
        blocks_spec = cfg.params.get("blocks")
        if not blocks_spec:
            raise ConfigError(f"{op} needs --blocks like '0,1;2,3'")
        blocks = [[int(x) for x in b.split(",") if x != ""] for b in str(blocks_spec).split(";")]
        try:
            grading = Grading.build(g, blocks)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        s = _param(cfg, "s")
        if op == "grading-search":
            w = grading_lemma_search(g, c, grading, s)
            return {"operation": op, "inputs_digest": digest, "witness": _witness(w),
                    "steps": steps}, "found" if w else "absent"
        r = _param(cfg, "r", DEFAULT_R_TABLE.get(s))
        if r is None:
            raise ConfigError(f"no default r for s={s}; pass --r")
        run = grading_lemma_constructive(g, c, grading, s, r, budget)
        return {"operation": op, "inputs_digest": digest, "witness": _witness(run.witness),
                "failed_step": run.failed_step, "steps": run.steps}, "found" if run.witness else "absent"
    if op == "proof-guided":
        s = _param(cfg, "s")
        w, steps = proof_guided_search(g, c, s, DEFAULT_R_TABLE, budget)
        return {"operation": op, "inputs_digest": digest, "witness": _witness(w),
                "steps": steps}, "found" if w else "absent"
    raise ConfigError(f"unknown machinery operation {op!r}")


def _shift_claims(cfg, inputs):
    n = _param(cfg, "n", 7)
    g, triples, c = gen.shift_graph_with_colouring(n)
    inputs["graph"] = g.digest()
    star = verify_rainbow_max_degree(g, c, 2)
    hole = find_rainbow_hole(g, c)
    run = find_hole_with_rainbow_run(g, c, 3)
    local = find_locally_rainbow_hole(g, c, 3)
    bad = first_non_monotone_rainbow_3path(g, c)
    result = {
        "n": n,
        "middle_colouring_proper": is_proper(g, c),
        "max_degree_2": "verified" if star is None else star.to_json(),
        "rainbow_hole": _witness(hole),
        "hole_with_rainbow_3run": None if run is None else {**run[0].to_json(), "start": run[1]},
        "hole_all_3windows_rainbow": _witness(local),
        "monotone_3paths": "verified" if bad is None else list(bad),
    }
    ok = star is None and hole is None and local is None and bad is None and result["middle_colouring_proper"]
    return result, "verified" if ok else "violated"


def _shift_deg2(cfg, inputs):
    n = _param(cfg, "n", 7)
    g, triples, c = gen.shift_graph_with_colouring(n)
    inputs["graph"] = g.digest()
    star = verify_rainbow_max_degree(g, c, _param(cfg, "d", 2))
    return {"n": n, "witness": _witness(star)}, "verified" if star is None else "violated"


def _aravind(cfg, inputs, default_graph: str | None = None, default_t: int | None = None):
    if cfg.graph is None and default_graph is not None:
        cfg.graph = default_graph
    g, _ = load_graph(cfg)
    inputs["graph"] = g.digest()
    t = _param(cfg, "t", default_t)
    if t is None:
        t = chromatic_number(g)[0]
    res = check_aravind(
        g, t, _param(cfg, "budget", None),
        jobs=_param(cfg, "jobs", 1),
        split_depth=_param(cfg, "split_depth", None),
        checkpoint=cfg.params.get("checkpoint"),
    )
    return res.to_json(), res.verdict


def _gallai_roy(cfg, inputs):
    count = _param(cfg, "count", 500)
    max_n = _param(cfg, "max_n", 20)
    rng = random.Random(cfg.seed)
    violations = []
    for i in range(count):
        n = rng.randint(1, max_n)
        g = gen.random_graph(n, rng.uniform(0.1, 0.7), rng.randrange(2**32))
        c = random_proper_colouring(g, rng)
        o = orient_by_colour(g, c)
        p = longest_directed_path(o)
        cols = [c[v] for v in p.vertices]
        chi = chromatic_number(g)[0]
        ok = o.is_acyclic() and all(a < b for a, b in zip(cols, cols[1:])) and len(p) >= chi
        if not ok:
            violations.append({"index": i, "graph": g.digest(), "path": list(p.vertices), "chi": chi})
    return {"pairs": count, "violations": violations}, "verified" if not violations else "violated"


def random_proper_colouring(g: Graph, rng: random.Random, max_colours: int | None = None) -> Colouring:
    """Random proper colouring: random vertex order, each vertex takes a random
    colour from ``1..k`` avoiding its coloured neighbours (``k`` is drawn from
    ``max_degree+1 .. n`` unless given)."""
    if g.n == 0:
        return Colouring(())
    low = max(g.degrees()) + 1
    k = max_colours if max_colours is not None else rng.randint(low, max(low, g.n))
    order = list(range(g.n))
    rng.shuffle(order)
    colours = [0] * g.n
    for v in order:
        banned = {colours[u] for u in g.neighbours(v)}
        free = [x for x in range(1, k + 1) if x not in banned]
        if not free:
            free = [max(banned | {k}) + 1]
        colours[v] = rng.choice(free)
    return Colouring(colours)


EXPERIMENTS: dict[str, Callable] = {
    "analyze": _analyze,
    "mycielski-23-invariants": _mycielski_23,
    "search": _search,
    "machinery": _machinery,
    "shift-claims": _shift_claims,
    "shift-deg2": _shift_deg2,
    "aravind": _aravind,
    "grotzsch-aravind": lambda cfg, inputs: _aravind(cfg, inputs, "family:grotzsch", 4),
    "mycielski-23-aravind": lambda cfg, inputs: _aravind(cfg, inputs, "family:mycielski:2,cycle,5", 5),
    "gallai-roy": _gallai_roy,
}
SEEDED = {"gallai-roy"}


def run_experiment(cfg: ExperimentConfig) -> tuple[dict, int]:
    """Run a named experiment; returns ``(report, exit_code)``.

    Raises :class:`ConfigError` for bad input (exit code 1 at the CLI).
    """
    cfg.validate()
    start = time.perf_counter()
    inputs: dict[str, str] = {}
    try:
        result, verdict = EXPERIMENTS[cfg.name](cfg, inputs)
        code = EXIT_BUDGET if verdict == "budget-exhausted" else EXIT_OK
    except BudgetExhausted as exc:
        result, verdict, code = {"nodes": exc.nodes}, "budget-exhausted", EXIT_BUDGET
    report = {
        "experiment": cfg.name,
        "version": __version__,
        "config": cfg.to_json(),
        "inputs": inputs,
        "verdict": verdict,
        "result": result,
        "elapsed": time.perf_counter() - start,
    }
    return report, code


def strip_timing(report: Any) -> Any:
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != "elapsed"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
