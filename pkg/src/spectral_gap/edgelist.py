"""Plain-text edge-list format.

::

    # comments start with '#'; blank lines are ignored
    n m
    u v        (m lines, 1-based vertices)
"""

from __future__ import annotations

import os
from typing import Iterable, TextIO

from .errors import HeaderMismatchError, MalformedLineError
from .graph import Graph, from_edge_list


def _int_pair(lineno: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLineError(lineno, line, "expected two integers")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(lineno, line, "expected two integers") from None


def loads(text: str | Iterable[str]) -> Graph:
    lines = text.splitlines() if isinstance(text, str) else text
    header = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        pair = _int_pair(lineno, line)
        if header is None:
            header = pair
            if pair[0] < 1 or pair[1] < 0:
                raise MalformedLineError(lineno, line, "need n >= 1 and m >= 0")
            continue
        edges.append((lineno, pair))
    if header is None:
        raise MalformedLineError(0, "", "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise HeaderMismatchError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, [e for _, e in edges])


def parse_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"# {c}" for c in comment.splitlines()]
    out.append(f"{g.n} {g.m}")
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def write(g: Graph, fh: TextIO, comment: str | None = None) -> None:
    fh.write(dumps(g, comment))


def emit_edge_list(g: Graph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write(g, fh, comment)
