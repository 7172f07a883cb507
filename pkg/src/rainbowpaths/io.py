"""Edge-list, colouring and triple-mapping file formats.

Edge list: first line ``n m``, then ``m`` lines ``u v`` (0-indexed).  Loops,
duplicate edges and out-of-range vertices are rejected with the offending
line number.  Colouring: ``n`` lines with one positive integer each.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .generators import TripleVertex
from .graph import Colouring, Graph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if fields:
            out.append((i, fields))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header 'n m'", 1)
    lineno, header = lines[0]
    if len(header) != 2:
        raise FormatError("header must be 'n m'", lineno)
    n, m = (_int(tok, lineno) for tok in header)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}", lineno)
    adj = [0] * n
    for lineno, fields in body:
        if len(fields) != 2:
            raise FormatError("edge line must be 'u v'", lineno)
        u, v = (_int(tok, lineno) for tok in fields)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        if adj[u] >> v & 1:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    return f"{g.n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)


def parse_colouring(text: str, n: int | None = None) -> Colouring:
    values = []
    for lineno, fields in _content_lines(text):
        if len(fields) != 1:
            raise FormatError("expected one colour per line", lineno)
        value = _int(fields[0], lineno)
        if value < 1:
            raise FormatError(f"colour must be positive, got {value}", lineno)
        values.append(value)
    if n is not None and len(values) != n:
        raise FormatError(f"expected {n} colours, found {len(values)}")
    return Colouring(values)


def format_colouring(c: Colouring) -> str:
    return "".join(f"{x}\n" for x in c)


def format_triples(triples: Sequence[TripleVertex]) -> str:
    return "".join(f"{i}: {t.a} {t.b} {t.c}\n" for i, t in enumerate(triples))


def parse_triples(text: str) -> list[TripleVertex]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        idx, _, rest = raw.partition(":")
        if _int(idx.strip(), lineno) != len(out):
            raise FormatError("triple indices must run 0, 1, 2, ...", lineno)
        a, b, c = (_int(tok, lineno) for tok in rest.split())
        if not a < b < c:
            raise FormatError("triple must be strictly increasing", lineno)
        out.append(TripleVertex(a, b, c))
    return out


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_colouring(path: str | Path, n: int | None = None) -> Colouring:
    return parse_colouring(Path(path).read_text(), n)
