"""Bit-row digraphs and undirected graphs, plus the structural predicates.

Vertices are ``0..n-1``. Row ``i`` is an int whose bit ``j`` is set when
``i -> j`` (or ``i -- j`` for :class:`UGraph`). Vertex sets are passed as
bitmasks or as iterables of vertex indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CapacityError

MAX_VERTICES = 64

PLUS = "plus"
MINUS = "minus"


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(vertices) -> int:
    """Normalize a bitmask or an iterable of vertex indices to a bitmask."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_capacity(n):
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")


def transpose_rows(rows, n):
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= bit
            row ^= low
    return cols


class Digraph:
    """Directed graph on ``n`` vertices; loops allowed.

    Instances are treated as immutable: ``out_rows`` and ``in_rows`` are
    tuples and ``in_rows`` is always the transpose of ``out_rows``.
    """

    __slots__ = ("n", "out_rows", "in_rows")

    def __init__(self, n: int, out_rows: Iterable[int]):
        _check_capacity(n)
        rows = tuple(int(r) for r in out_rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for r in rows:
            if r < 0 or r & ~full:
                raise ValueError("row has bits outside the vertex range")
        self.n = n
        self.out_rows = rows
        self.in_rows = tuple(transpose_rows(rows, n))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, rows)

    @classmethod
    def cycle(cls, n: int) -> "Digraph":
        """Directed cycle 0 -> 1 -> ... -> n-1 -> 0 (a loop when n == 1)."""
        return cls.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int, loops: bool = True) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, [full if loops else full & ~(1 << i) for i in range(n)])

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_rows[u])]

    def num_arcs(self) -> int:
        return sum(popcount(r) for r in self.out_rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def out_neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.out_rows[u]))

    def in_neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.in_rows[u]))

    def out_degree(self, u: int) -> int:
        return popcount(self.out_rows[u])

    def in_degree(self, u: int) -> int:
        return popcount(self.in_rows[u])

    def reverse(self) -> "Digraph":
        return Digraph(self.n, self.in_rows)

    def has_loops(self) -> bool:
        return any(r >> i & 1 for i, r in enumerate(self.out_rows))

    def without_loops(self) -> "Digraph":
        return Digraph(self.n, [r & ~(1 << i) for i, r in enumerate(self.out_rows)])

    def relabel(self, perm) -> "Digraph":
        """Digraph with arc ``perm[u] -> perm[v]`` for every arc ``u -> v``."""
        return Digraph.from_arcs(self.n, [(perm[u], perm[v]) for u, v in self.arcs()])

    def is_symmetric(self) -> bool:
        return self.out_rows == self.in_rows

    def to_ugraph(self) -> "UGraph":
        """Forget directions of a symmetric loopless digraph."""
        if not self.is_symmetric() or self.has_loops():
            raise ValueError("only symmetric loopless digraphs correspond to graphs")
        return UGraph(self.n, self.out_rows)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.out_rows == other.out_rows

    def __hash__(self):
        return hash((self.n, self.out_rows))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


class UGraph:
    """Simple undirected graph on ``n`` vertices (symmetric rows, no loops)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        _check_capacity(n)
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        for i, r in enumerate(rows):
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            if r >> n:
                raise ValueError("row has bits outside the vertex range")
        if tuple(transpose_rows(rows, n)) != rows:
            raise ValueError("adjacency rows are not symmetric")
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def cycle(cls, n: int) -> "UGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "UGraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    def max_degree(self) -> int:
        return max(popcount(r) for r in self.rows)

    def min_degree(self) -> int:
        return min(popcount(r) for r in self.rows)

    def neighborhood(self, vertices) -> int:
        """N(X) as a bitmask."""
        acc = 0
        for v in iter_bits(as_mask(vertices)):
            acc |= self.rows[v]
        return acc

    def e(self, x, y=None) -> int:
        """Edge count e(X, Y); ``e(X)`` counts edges inside X."""
        x = as_mask(x)
        if y is None:
            return sum(popcount(self.rows[v] & x) for v in iter_bits(x)) // 2
        y = as_mask(y)
        if x & y:
            raise ValueError("e(X, Y) needs disjoint sets")
        return sum(popcount(self.rows[v] & y) for v in iter_bits(x))

    def components(self, within=None) -> list[int]:
        """Connected components of G<within> as bitmasks, ordered by lowest vertex."""
        rest = (1 << self.n) - 1 if within is None else as_mask(within)
        return _components(self.rows, rest)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabel(self, perm) -> "UGraph":
        return UGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other):
        return isinstance(other, UGraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"UGraph(n={self.n}, edges={self.edges()})"


def _components(rows, rest):
    comps = []
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= rows[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _reach(rows, start):
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            grow |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen


def strong_rows(out_rows, in_rows, n) -> bool:
    full = (1 << n) - 1
    return _reach(out_rows, 0) == full and _reach(in_rows, 0) == full


def is_strong(d: Digraph) -> bool:
    """True when every vertex reaches every other along directed paths."""
    return strong_rows(d.out_rows, d.in_rows, d.n)


def _rows_for(d, direction):
    if direction == PLUS:
        return d.out_rows
    if direction == MINUS:
        return d.in_rows
    raise ValueError(f"direction must be {PLUS!r} or {MINUS!r}, got {direction!r}")


def q_set_check(d: Digraph, s, direction: str = PLUS) -> bool:
    """Is ``s`` a q+-set (``direction="plus"``) or q--set (``"minus"``) of ``d``?"""
    rows = _rows_for(d, direction)
    s = as_mask(s)
    if popcount(s) < 2:
        return False
    for u in iter_bits(s):
        if not any(rows[u] & rows[v] for v in iter_bits(s & ~(1 << u))):
            return False
    return True


def common_union(d: Digraph, s, direction: str = PLUS) -> int:
    """Union of N(u) & N(v) over distinct pairs u, v of ``s``, as a bitmask."""
    rows = _rows_for(d, direction)
    members = list(iter_bits(as_mask(s)))
    acc = 0
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            acc |= rows[u] & rows[v]
    return acc


def quadrangular_side(rows, n) -> bool:
    """Check the q-set condition for one direction given neighbourhood rows.

    Only vertices sharing a neighbour with some other vertex can sit in a
    q-set, so subsets of those candidates are scanned. The union of pairwise
    intersections is built incrementally: U(S) = U(S - u) | (N(u) & N(S - u))
    where u is the lowest member.
    """
    cand = []
    for u in range(n):
        ru = rows[u]
        if ru:
            for v in range(n):
                if v != u and ru & rows[v]:
                    cand.append(u)
                    break
    m = len(cand)
    if m < 2:
        return True
    pair = [[rows[a] & rows[b] for b in cand] for a in cand]
    partner = [0] * m
    for i in range(m):
        pi = pair[i]
        for j in range(m):
            if j != i and pi[j]:
                partner[i] |= 1 << j
    union = [0] * (1 << m)
    for s in range(3, 1 << m):
        low = s & -s
        rest = s ^ low
        if not rest:
            continue
        pi = pair[low.bit_length() - 1]
        acc = union[rest]
        r = rest
        while r:
            lb = r & -r
            acc |= pi[lb.bit_length() - 1]
            r ^= lb
        union[s] = acc
        size = bin(s).count("1")
        if bin(acc).count("1") < size:
            r = s
            while r:
                lb = r & -r
                if not partner[lb.bit_length() - 1] & s:
                    break
                r ^= lb
            else:
                return False
    return True


def squad_rows(out_rows, in_rows, n) -> bool:
    return quadrangular_side(out_rows, n) and quadrangular_side(in_rows, n)


def is_s_quadrangular(d: Digraph) -> bool:
    """Every q+-set S has at least |S| vertices in the union of pairwise
    common out-neighbourhoods, and likewise for q--sets with in-neighbourhoods.

    Loops count: a loop at v puts v in N+(v) and N-(v).
    """
    return squad_rows(d.out_rows, d.in_rows, d.n)


def is_s_quadrangular_graph(g: UGraph) -> bool:
    # the complete biorientation has out_rows == in_rows == g.rows
    return quadrangular_side(g.rows, g.n)


def complete_biorientation(g: UGraph) -> Digraph:
    return Digraph(g.n, g.rows)


def line_digraph(d: Digraph) -> tuple[Digraph, list[tuple[int, int]]]:
    """Line digraph of ``d`` and the arc each new vertex stands for.

    New vertices are numbered in the order of :meth:`Digraph.arcs`.
    """
    labels = d.arcs()
    if not labels:
        raise ValueError("line digraph needs at least one arc")
    if len(labels) > MAX_VERTICES:
        raise CapacityError(f"{len(labels)} arcs exceed the {MAX_VERTICES}-vertex capacity")
    by_tail = [0] * d.n
    for k, (u, _) in enumerate(labels):
        by_tail[u] |= 1 << k
    rows = [by_tail[v] for _, v in labels]
    return Digraph(len(labels), rows), labels


def is_eulerian(d: Digraph) -> bool:
    """Strong with in-degree equal to out-degree at every vertex."""
    balanced = all(popcount(o) == popcount(i) for o, i in zip(d.out_rows, d.in_rows))
    return balanced and is_strong(d)


def kronecker_digraph(a: Digraph, b: Digraph) -> Digraph:
    """Tensor product; vertex (i, j) is ``i * b.n + j``."""
    n = a.n * b.n
    if n > MAX_VERTICES:
        raise CapacityError(f"product has {n} vertices, capacity is {MAX_VERTICES}")
    rows = []
    for i in range(a.n):
        for j in range(b.n):
            row = 0
            for k in iter_bits(a.out_rows[i]):
                row |= b.out_rows[j] << (k * b.n)
            rows.append(row)
    return Digraph(n, rows)


def max_semidegree(d: Digraph) -> int:
    return max(max(popcount(r) for r in d.out_rows), max(popcount(r) for r in d.in_rows))
