"""Text formats for ideals and graphs, plus the named graph generators.

Ideal file::

    # comment
    vars 3
    5 0 0
    0 4 5

Graph file::

    vertices 3
    edge 1 2
    edge 2 3
"""

from __future__ import annotations

import warnings
from pathlib import Path
from typing import Sequence

from .errors import ParseError, ValidationError
from .graphs import core as gcore
from .graphs.core import Graph
from .monomial import MonomialIdeal


class DuplicateEdgeWarning(UserWarning):
    pass


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _int(token: str, lineno: int | None, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {token!r}", lineno) from None


def parse_ideal(text: str) -> MonomialIdeal:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty ideal description")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "vars":
        raise ParseError("first line must be 'vars <s>'", lineno)
    s = _int(head[1], lineno, "variable count")
    if s < 1:
        raise ParseError("variable count must be positive", lineno)
    gens = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != s:
            raise ParseError(f"expected {s} exponents, got {len(tokens)}", lineno)
        exps = tuple(_int(t, lineno, "exponent") for t in tokens)
        if any(e < 0 for e in exps):
            raise ParseError("exponents must be non-negative", lineno)
        gens.append(exps)
    return MonomialIdeal(s, gens)


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph description")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "vertices":
        raise ParseError("first line must be 'vertices <n>'", lineno)
    n = _int(head[1], lineno, "vertex count")
    if n < 1:
        raise ParseError("vertex count must be positive", lineno)
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in lines[1:]:
        if len(tokens) != 3 or tokens[0] != "edge":
            raise ParseError("expected 'edge <u> <v>'", lineno)
        u = _int(tokens[1], lineno, "vertex")
        v = _int(tokens[2], lineno, "vertex")
        if u == v:
            raise ValidationError(f"line {lineno}: loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= n:
                raise ValidationError(f"line {lineno}: vertex {w} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key} collapsed", DuplicateEdgeWarning, stacklevel=2)
        seen.add(key)
    return Graph(n, seen)


def serialize_ideal(I: MonomialIdeal) -> str:
    rows = [f"vars {I.num_vars}"]
    rows += [" ".join(str(e) for e in g.exponents) for g in I.generators]
    return "\n".join(rows) + "\n"


def serialize_graph(G: Graph) -> str:
    rows = [f"vertices {G.num_vertices}"]
    rows += [f"edge {u} {v}" for u, v in G.edges]
    return "\n".join(rows) + "\n"


def detect_format(text: str) -> str:
    """``"ideal"`` or ``"graph"``, from the first content line."""
    lines = _content_lines(text)
    if lines and lines[0][1][0] == "vars":
        return "ideal"
    if lines and lines[0][1][0] == "vertices":
        return "graph"
    raise ParseError("cannot tell ideal from graph: expected 'vars' or 'vertices' first", lines[0][0] if lines else None)


NAMED_GRAPHS = ("cycle <s>", "path <s>", "complete <s>", "T10", "octahedron", "two-triangles", "whisker <graph>")


def _named_graph(tokens: Sequence[str]) -> tuple[Graph, int]:
    """Parse one named generator from the front of ``tokens``; returns the graph and tokens used."""
    if not tokens:
        raise ParseError("missing graph name")
    name = tokens[0].lower()
    if name in ("cycle", "path", "complete"):
        if len(tokens) < 2:
            raise ParseError(f"'{name}' needs a size")
        size = _int(tokens[1], None, "size")
        maker = {"cycle": gcore.cycle, "path": gcore.path, "complete": gcore.complete}[name]
        return maker(size), 2
    if name == "t10":
        return gcore.t10(), 1
    if name == "octahedron":
        return gcore.octahedron(), 1
    if name == "two-triangles":
        return gcore.two_triangles(), 1
    if name == "whisker":
        inner, used = _named_graph(tokens[1:])
        return gcore.whisker(inner), used + 1
    raise ParseError(f"unknown graph {tokens[0]!r}; named graphs: {', '.join(NAMED_GRAPHS)}")


def resolve_graph(tokens: Sequence[str]) -> Graph:
    """A graph from a file path or a named generator such as ``whisker cycle 5``."""
    if len(tokens) == 1 and Path(tokens[0]).is_file():
        return parse_graph(Path(tokens[0]).read_text())
    G, used = _named_graph(tokens)
    if used != len(tokens):
        raise ParseError(f"unexpected trailing tokens {list(tokens[used:])}")
    return G


def load_input(tokens: Sequence[str]) -> MonomialIdeal | Graph:
    """An ideal file, a graph file, or a named graph."""
    if len(tokens) == 1 and Path(tokens[0]).is_file():
        text = Path(tokens[0]).read_text()
        return parse_ideal(text) if detect_format(text) == "ideal" else parse_graph(text)
    return resolve_graph(tokens)
