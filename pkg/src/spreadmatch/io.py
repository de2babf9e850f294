"""Plain-text graph and matching files.

Graph file: a header line ``n m`` followed by ``m`` lines ``u v``; the edge
id is the line index.  Lines starting with ``#`` and blank lines are
ignored.  Matching file: one edge id per line, ascending.
"""

from __future__ import annotations

from typing import Iterable

from .graph import CubicGraph, GraphError, build_graph


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((no, s.split()))
    return out


def _ints(no: int, fields: list[str], k: int) -> list[int]:
    if len(fields) != k:
        raise ParseError(f"line {no}: expected {k} integers, got {len(fields)} fields")
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise ParseError(f"line {no}: {exc}") from None


def parse_graph(text: str) -> CubicGraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    n, m = _ints(*lines[0], 2)
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, file has {len(lines) - 1}")
    pairs = [tuple(_ints(no, f, 2)) for no, f in lines[1:]]
    try:
        return build_graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: CubicGraph) -> str:
    rows = [f"{g.n} {g.m}"]
    rows += [f"{u} {v}" for u, v in g.edges.values()]
    return "\n".join(rows) + "\n"


def read_graph(path: str) -> CubicGraph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: CubicGraph, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g))


def parse_matching(text: str) -> frozenset[int]:
    return frozenset(_ints(no, f, 1)[0] for no, f in _content_lines(text))


def format_matching(edges: Iterable[int]) -> str:
    return "".join(f"{e}\n" for e in sorted(edges))


def read_matching(path: str) -> frozenset[int]:
    with open(path, encoding="ascii") as fh:
        return parse_matching(fh.read())
