"""Plain-text graph and vertex-set files.

Graph format: the first non-comment line is ``n m``, followed by ``m`` lines
``u v`` with 0-indexed vertex ids.  ``#`` starts a comment; blank lines are
ignored.  Vertex-set files hold one id per line.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .digraph import DiGraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def _ints(fields: list[str], expected: int, lineno: int) -> list[int]:
    if len(fields) != expected:
        raise ParseError(f"expected {expected} integers, got {len(fields)} fields", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(fields)!r}", lineno) from None


def parse_graph(text: str) -> DiGraph:
    lines = _content_lines(text)
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    n, m = _ints(fields, 2, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    succ: dict[int, set[int]] = {v: set() for v in range(n)}
    count = 0
    last = lineno
    for lineno, fields in lines:
        last = lineno
        u, v = _ints(fields, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u}, {v}) id out of range for n={n}", lineno)
        if v in succ[u]:
            raise ParseError(f"duplicate arc ({u}, {v})", lineno)
        succ[u].add(v)
        count += 1
    if count != m:
        raise ParseError(f"header announces {m} arcs, found {count}", last)
    return DiGraph(succ)


def write_graph(g: DiGraph) -> str:
    if g.vertices != tuple(range(g.n)):
        raise ValueError("only graphs on vertices 0..n-1 can be written")
    lines = [f"{g.n} {g.num_arcs}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str) -> list[int]:
    """Vertex ids one per line, order preserved."""
    out = []
    for lineno, fields in _content_lines(text):
        (v,) = _ints(fields, 1, lineno)
        out.append(v)
    return out


def write_vertex_set(vertices: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in vertices)
