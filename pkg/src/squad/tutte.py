"""f-factors of undirected graphs, the Tutte condition and the 2-factor obstruction partition.

``f`` arguments accept an int (constant target), a sequence indexed by
vertex, or a dict ``{vertex: target}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapacityError, PreconditionError
from .graph import UGraph, as_mask, iter_bits, popcount

MAX_SCAN_VERTICES = 14

_PC_TABLES = {}


def _pc(n):
    if n not in _PC_TABLES:
        _PC_TABLES[n] = _kernels.popcount_table(n)
    return _PC_TABLES[n]


def f_values(g: UGraph, f) -> list[int]:
    if isinstance(f, int):
        vals = [f] * g.n
    elif isinstance(f, dict):
        vals = [f[v] for v in range(g.n)]
    else:
        vals = list(f)
    if len(vals) != g.n:
        raise ValueError(f"f has {len(vals)} values for {g.n} vertices")
    if any(v < 1 for v in vals):
        raise ValueError("f must be a positive integer at every vertex")
    return vals


def _check_scan_size(g):
    if g.n > MAX_SCAN_VERTICES:
        raise CapacityError(f"exhaustive (S, T) scan is limited to {MAX_SCAN_VERTICES} vertices")


def q_count(g: UGraph, s, t, f=2) -> int:
    """Components Q of G - (S u T) with e(Q, T) + sum of f over Q odd."""
    s, t = as_mask(s), as_mask(t)
    if s & t:
        raise ValueError("S and T must be disjoint")
    fv = f_values(g, f)
    count = 0
    rest = ((1 << g.n) - 1) & ~(s | t)
    for comp in g.components(rest):
        par = sum(popcount(g.rows[v] & t) + fv[v] for v in iter_bits(comp))
        count += par & 1
    return count


def odd_components(g: UGraph, s, t) -> int:
    """oc(S, T): components of G - S - T joined to T by an odd number of edges."""
    return q_count(g, s, t, 2)


@dataclass(frozen=True)
class TutteViolator:
    """Disjoint S, T with ``lhs = q(S,T) + sum_T (f - d_{G-S}) > rhs = sum_S f``."""

    s: int
    t: int
    lhs: int
    rhs: int


def tutte_lhs_rhs(g: UGraph, s, t, f=2) -> tuple[int, int]:
    """Both sides of the f-factor inequality for one pair (S, T)."""
    s, t = as_mask(s), as_mask(t)
    fv = f_values(g, f)
    keep = ((1 << g.n) - 1) & ~s
    lhs = q_count(g, s, t, fv) + sum(fv[v] - popcount(g.rows[v] & keep) for v in iter_bits(t))
    rhs = sum(fv[v] for v in iter_bits(s))
    return lhs, rhs


def tutte_check(g: UGraph, f=2):
    """None if every disjoint (S, T) satisfies the f-factor inequality.

    Otherwise the violator maximizing ``lhs - rhs``, ties broken by the
    smallest ``(|T|, T mask, S mask)``.
    """
    _check_scan_size(g)
    fv = f_values(g, f)
    rows = np.array(g.rows, dtype=np.int64)
    s, t, lhs, rhs = _kernels.tutte_scan(rows, np.array(fv, dtype=np.int64), g.n, _pc(g.n))
    if lhs <= rhs:
        return None
    return TutteViolator(int(s), int(t), int(lhs), int(rhs))


def find_f_factor(g: UGraph, f=2):
    """Lexicographically least edge list whose degrees equal ``f``, or None.

    Backtracking over the edges in order, trying inclusion first. A vertex's
    remaining demand must never exceed its remaining incident edges, and
    failed (edge index, demand vector) states are memoized.
    """
    fv = f_values(g, f)
    edges = g.edges()
    m = len(edges)
    need = fv[:]
    if sum(need) % 2 or any(need[v] > g.degree(v) for v in range(g.n)):
        return None
    # rem[k][v]: edges with index >= k incident to v
    rem = [[0] * g.n for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        rem[k] = rem[k + 1][:]
        u, v = edges[k]
        rem[k][u] += 1
        rem[k][v] += 1
    chosen = []
    failed = set()
    left = [sum(need)]

    def rec(k):
        if left[0] == 0:
            return True
        if k == m:
            return False
        key = (k, tuple(need))
        if key in failed:
            return False
        u, v = edges[k]
        nxt = rem[k + 1]
        if need[u] and need[v] and need[u] - 1 <= nxt[u] and need[v] - 1 <= nxt[v]:
            need[u] -= 1
            need[v] -= 1
            left[0] -= 2
            chosen.append(edges[k])
            if rec(k + 1):
                return True
            chosen.pop()
            need[u] += 1
            need[v] += 1
            left[0] += 2
        if need[u] <= nxt[u] and need[v] <= nxt[v] and rec(k + 1):
            return True
        failed.add(key)
        return False

    return list(chosen) if rec(0) else None


def find_2_factor(g: UGraph):
    return find_f_factor(g, 2)


def is_f_factor(g: UGraph, edges, f=2) -> bool:
    fv = f_values(g, f)
    deg = [0] * g.n
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen or not g.has_edge(u, v):
            return False
        seen.add(key)
        deg[u] += 1
        deg[v] += 1
    return deg == fv


@dataclass(frozen=True)
class TuttePartition:
    """Vertex partition witnessing the absence of a 2-factor, as bitmasks.

    ``w`` is the objective value for (S, T), ``oc`` the number of components
    of G - S - T with an odd number of edges into T, ``eTO`` the edge count
    between T and O.
    """

    s: int
    t: int
    o: int
    r: int
    w: int
    oc: int
    eTO: int

    def sets(self) -> dict[str, list[int]]:
        return {k: list(iter_bits(getattr(self, k))) for k in "stor"}


def deficiency_w(g: UGraph, s, t) -> int:
    """|T| - |S| - e(T) - (e(T, V-S-T) - oc(S, T)) / 2."""
    s, t = as_mask(s), as_mask(t)
    rest = ((1 << g.n) - 1) & ~(s | t)
    twice = 2 * popcount(t) - 2 * popcount(s) - 2 * g.e(t) - g.e(t, rest) + odd_components(g, s, t)
    return twice // 2


def build_partition(g: UGraph) -> TuttePartition:
    """Optimal (S, T, O, R) for a 2-factor-free graph of minimum degree 2.

    Scans every disjoint (S, T) and keeps the best by: largest w, smallest
    |T|, largest |S|, smallest oc, then smallest (T mask, S mask). O is the
    union of components of G - S - T with an odd number of edges into T.
    """
    _check_scan_size(g)
    if g.min_degree() < 2:
        raise PreconditionError("min_degree", f"minimum degree {g.min_degree()} < 2")
    if find_2_factor(g) is not None:
        raise PreconditionError("has_2_factor", "graph has a 2-factor")
    rows = np.array(g.rows, dtype=np.int64)
    s, t, w2, oc = (int(x) for x in _kernels.partition_scan(rows, g.n, _pc(g.n)))
    rest = ((1 << g.n) - 1) & ~(s | t)
    o = 0
    for comp in g.components(rest):
        if g.e(comp, t) % 2:
            o |= comp
    r = rest & ~o
    return TuttePartition(s, t, o, r, w2 // 2, oc, g.e(t, o))


@dataclass(frozen=True)
class PropertyViolation:
    prop: str
    witness: object
    message: str


def verify_partition(g: UGraph, p: TuttePartition) -> list[PropertyViolation]:
    """Check the seven structural properties of an obstruction partition.

    Returns one entry per failing property (the first witness found), in
    order (i) to (vii); an empty list means all hold.
    """
    full = (1 << g.n) - 1
    s, t, o, r = p.s, p.t, p.o, p.r
    if s & t or s & o or s & r or t & o or t & r or o & r or (s | t | o | r) != full:
        raise ValueError("S, T, O, R must partition the vertex set")
    rows = g.rows
    out = []

    def fail(prop, witness, message):
        out.append(PropertyViolation(prop, witness, message))

    for u in iter_bits(t):
        if rows[u] & t:
            v = (rows[u] & t & -(rows[u] & t)).bit_length() - 1
            fail("i", (u, v), f"T vertices {u} and {v} are adjacent")
            break

    for u in iter_bits(r):
        if rows[u] & (o | t):
            v = (rows[u] & (o | t) & -(rows[u] & (o | t))).bit_length() - 1
            fail("ii", (u, v), f"edge {u}-{v} joins R to O u T")
            break

    o_comps = g.components(o)
    for comp in o_comps:
        if g.e(comp, t) % 2 == 0:
            fail("iii", list(iter_bits(comp)), "component of G<O> has an even number of edges into T")
            break

    found = False
    for u in iter_bits(t):
        for comp in o_comps:
            if popcount(rows[u] & comp) >= 2:
                fail("iv", (u, list(iter_bits(comp))), f"T vertex {u} has two edges into one O component")
                found = True
                break
        if found:
            break

    for u in iter_bits(o):
        if popcount(rows[u] & t) > 1:
            fail("v", u, f"O vertex {u} has {popcount(rows[u] & t)} edges into T")
            break

    found = False
    for u in iter_bits(t):
        if rows[u] & s:
            continue
        for v in iter_bits(rows[u] & o):
            if not rows[v] & o:
                fail("vi", (v, u), f"edge {v}-{u} with e({u}, S) = 0 and e({v}, O) = 0")
                found = True
                break
        if found:
            break

    oc = odd_components(g, s, t)
    twice = 2 * popcount(t) - 2 * popcount(s) - g.e(t, o) + oc
    if twice <= 0:
        fail("vii", twice, f"|T| - |S| - (e(T,O) - oc)/2 = {twice / 2} is not positive")
    return out
