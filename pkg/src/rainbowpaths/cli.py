"""Command-line entry point.

JSON reports go to standard output (or ``--json FILE``); human-readable
progress goes to standard error.  Exit codes: 0 verdict obtained, 1 input
error, 2 budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import generators as gen
from .experiments import (
    EXIT_INPUT,
    ConfigError,
    ExperimentConfig,
    dumps,
    family_graph,
    run_experiment,
)
from .graph import Colouring
from .invariants import dsatur_colouring
from .io import format_colouring, format_graph, format_triples


def _graph_source(args) -> str | None:
    if getattr(args, "graph", None):
        return args.graph
    if getattr(args, "family", None):
        return "family:" + args.family
    return None


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", metavar="FILE", help="edge-list file")
    src.add_argument("--family", metavar="NAME:PARAMS",
                     help="generated graph, e.g. cycle:5, mycielski:2,cycle,5, shift:7, kneser:5,2")
    p.add_argument("--seed", type=int)


def _add_common(p: argparse.ArgumentParser, colouring: bool = True) -> None:
    _add_graph_args(p)
    if colouring:
        p.add_argument("--colouring", metavar="FILE|middle|greedy|enumerate")
    p.add_argument("--s", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--json", metavar="FILE", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowpaths", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("--family", required=True, metavar="NAME:PARAMS")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--colouring", choices=["middle", "greedy"])
    p.add_argument("--colouring-out", metavar="FILE")
    p.add_argument("--triples-out", metavar="FILE")

    p = sub.add_parser("analyze", help="chromatic number, clique number, girth")
    _add_common(p, colouring=False)

    p = sub.add_parser("search", help="rainbow induced paths and holes")
    _add_common(p)
    p.add_argument("--kind", default="path",
                   choices=["path", "hole", "hole-run", "local-hole", "stable-cover"])

    p = sub.add_parser("machinery", help="proof operations with JSON traces")
    p.add_argument("op", choices=["orient", "longest-path", "grs", "constants", "a-set", "b-set",
                                  "candidates", "grading-search", "grading-constructive",
                                  "proof-guided"])
    _add_common(p)
    p.add_argument("--r", type=int)
    p.add_argument("--c-prime", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--q", help="path as comma-separated vertices")
    p.add_argument("--blocks", help="grading blocks, e.g. '0,1;2,3'")

    p = sub.add_parser("verify", help="check the shift-graph claims")
    p.add_argument("claim", choices=["shift-claims", "shift-deg2"])
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--json", metavar="FILE")

    p = sub.add_parser("hunt", help="exhaustive colouring search for counterexamples")
    _add_common(p)
    p.add_argument("--t", type=int, help="target path length (default: chromatic number)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--split-depth", type=int)
    p.add_argument("--checkpoint", metavar="FILE")

    p = sub.add_parser("run", help="run a named experiment")
    p.add_argument("experiment")
    _add_common(p)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--checkpoint", metavar="FILE")
    return parser


def _params(args, *names) -> dict:
    out = {}
    for name in names:
        value = getattr(args, name, None)
        if value is not None:
            out[name] = value
    return out


def _config(args) -> ExperimentConfig:
    common = ("s", "budget")
    if args.command == "analyze":
        return ExperimentConfig("analyze", _graph_source(args), None, _params(args, "budget"), args.seed)
    if args.command == "search":
        params = _params(args, *common, "kind")
        return ExperimentConfig("search", _graph_source(args), args.colouring, params, args.seed)
    if args.command == "machinery":
        params = _params(args, *common, "r", "c_prime", "kappa", "z", "q", "blocks")
        params["op"] = args.op
        return ExperimentConfig("machinery", _graph_source(args), args.colouring, params, args.seed)
    if args.command == "verify":
        return ExperimentConfig(args.claim, None, None, _params(args, "n", "d"))
    if args.command == "hunt":
        if args.colouring not in (None, "enumerate"):
            raise ConfigError("hunt enumerates all colourings; use --colouring enumerate or omit it")
        params = _params(args, "budget", "t", "jobs", "split_depth", "checkpoint")
        return ExperimentConfig("aravind", _graph_source(args), "enumerate", params, args.seed)
    params = _params(args, *common, "t", "n", "count", "jobs", "checkpoint")
    return ExperimentConfig(args.experiment, _graph_source(args), args.colouring, params, args.seed)


def _gen(args) -> int:
    try:
        g, triples = family_graph(args.family, args.seed)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = format_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.colouring:
        if args.colouring == "middle":
            if triples is None:
                print("error: middle colouring needs the shift family", file=sys.stderr)
                return EXIT_INPUT
            c = gen.middle_element_colouring(triples)
        else:
            c = Colouring(x + 1 for x in dsatur_colouring(g))
        if args.colouring_out:
            Path(args.colouring_out).write_text(format_colouring(c))
        else:
            sys.stderr.write(format_colouring(c))
    if triples is not None and args.triples_out:
        Path(args.triples_out).write_text(format_triples(triples))
    print(f"{g!r} digest={g.digest()}", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if args.command == "gen":
        return _gen(args)
    try:
        cfg = _config(args)
        report, code = run_experiment(cfg)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(report)
    if getattr(args, "json", None):
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{report['experiment']}: {report['verdict']} ({report['elapsed']:.2f}s)", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
