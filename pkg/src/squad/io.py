"""Text formats for graphs and matrices.

Graph files::

    # comment
    digraph 3        (or: graph 3)
    0 1
    1 2

Matrix files::

    matrix 2
    0.7071 0.7071
    0.7071 -0.7071+0j
"""

from __future__ import annotations

import re

import numpy as np

from .errors import GraphFormatError
from .graph import MAX_VERTICES, Digraph, UGraph

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^(?:{_NUM}|{_NUM}[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?j|{_NUM}j)$")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _header(lines, keywords):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise GraphFormatError("missing header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] not in keywords or not parts[1].isdigit():
        raise GraphFormatError(f"bad header {line!r}; expected '<{'|'.join(keywords)}> <n>'", lineno)
    n = int(parts[1])
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}", lineno)
    return parts[0], n


def parse_graph_file(text: str):
    """Parse a graph file into a :class:`Digraph` or :class:`UGraph`."""
    lines = _content_lines(text)
    kind, n = _header(lines, ("digraph", "graph"))
    pairs = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if kind == "graph" and u == v:
            raise GraphFormatError(f"loop {u} {u} is not allowed in a graph", lineno)
        pairs.append((u, v))
    if kind == "graph":
        return UGraph.from_edges(n, pairs)
    return Digraph.from_arcs(n, pairs)


def format_graph(g) -> str:
    if isinstance(g, UGraph):
        head, pairs = f"graph {g.n}", g.edges()
    else:
        head, pairs = f"digraph {g.n}", g.arcs()
    return "\n".join([head] + [f"{u} {v}" for u, v in pairs]) + "\n"


def format_complex(z: complex) -> str:
    re_, im = float(z.real), float(z.imag)
    if im == 0:
        return repr(re_)
    sign = "-" if im < 0 else "+"
    return f"{re_!r}{sign}{abs(im)!r}j"


def parse_matrix(text: str):
    lines = _content_lines(text)
    _, n = _header(lines, ("matrix",))
    rows = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != n:
            raise GraphFormatError(f"expected {n} entries, got {len(tokens)}", lineno)
        row = []
        for tok in tokens:
            if not _COMPLEX.match(tok):
                raise GraphFormatError(f"bad complex entry {tok!r}", lineno)
            row.append(complex(tok))
        rows.append(row)
    if len(rows) != n:
        raise GraphFormatError(f"expected {n} rows, got {len(rows)}")
    m = np.array(rows, dtype=np.complex128)
    m.flags.writeable = False
    return m


def format_matrix(m) -> str:
    m = np.asarray(m)
    lines = [f"matrix {m.shape[0]}"]
    lines += [" ".join(format_complex(z) for z in row) for row in m]
    return "\n".join(lines) + "\n"
