"""Cycle factors, Hall witnesses and Hamilton cycles in digraphs.

Cycles have length at least 2 and never use loops; a 2-cycle is the arc
pair ``u -> v``, ``v -> u``. Loops in the host digraph are ignored here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    PLUS,
    MINUS,
    Digraph,
    UGraph,
    as_mask,
    complete_biorientation,
    is_s_quadrangular,
    is_strong,
    iter_bits,
    max_semidegree,
    popcount,
)

OUT = "out"
IN = "in"


class CycleFactor:
    """Vertex-disjoint cycles covering ``0..n-1`` with successor/predecessor maps."""

    __slots__ = ("n", "cycles", "succ", "pred", "index")

    def __init__(self, n: int, cycles):
        self.n = n
        self.cycles = tuple(tuple(c) for c in cycles)
        self.succ = [-1] * n
        self.pred = [-1] * n
        self.index = [-1] * n
        for k, cyc in enumerate(self.cycles):
            if len(cyc) < 2:
                raise ValueError(f"cycle {list(cyc)} is shorter than 2")
            for pos, u in enumerate(cyc):
                if not 0 <= u < n or self.index[u] != -1:
                    raise ValueError(f"vertex {u} repeated or out of range")
                v = cyc[(pos + 1) % len(cyc)]
                self.succ[u] = v
                self.pred[v] = u
                self.index[u] = k
        if -1 in self.index:
            raise ValueError("cycles do not cover every vertex")

    @classmethod
    def from_successors(cls, succ) -> "CycleFactor":
        n = len(succ)
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            cyc = []
            u = start
            while not seen[u]:
                seen[u] = True
                cyc.append(u)
                u = succ[u]
            cycles.append(cyc)
        return cls(n, cycles)

    def __len__(self):
        return len(self.cycles)

    def cycle_of(self, u: int) -> int:
        return self.index[u]

    def walk(self, start: int, stop: int) -> list[int]:
        """Vertices from ``start`` forward to ``stop`` inclusive, on one cycle."""
        out = [start]
        u = start
        while u != stop:
            u = self.succ[u]
            out.append(u)
        return out

    def shortest(self) -> int:
        """Index of a shortest cycle (lowest index among ties)."""
        return min(range(len(self.cycles)), key=lambda k: (len(self.cycles[k]), k))

    def is_valid_for(self, d: Digraph) -> bool:
        return all(
            u != self.succ[u] and d.has_arc(u, self.succ[u]) for u in range(self.n)
        ) and self.n == d.n

    def __eq__(self, other):
        return isinstance(other, CycleFactor) and self.cycles == other.cycles

    def __repr__(self):
        return f"CycleFactor({[list(c) for c in self.cycles]})"


@dataclass(frozen=True)
class HallViolator:
    """A set ``x`` whose joint out- (or in-) neighbourhood is smaller than it."""

    x: int
    side: str

    def vertices(self) -> list[int]:
        return list(iter_bits(self.x))


def _loopless(rows):
    return [r & ~(1 << i) for i, r in enumerate(rows)]


def hall_check(d: Digraph, x, side: str = OUT) -> bool:
    """True when ``|N(x)| >= |x|`` on the given side (loops not counted)."""
    x = as_mask(x)
    if not x:
        raise ValueError("hall_check needs a nonempty vertex set")
    rows = d.out_rows if side in (OUT, PLUS) else d.in_rows
    acc = 0
    for v in iter_bits(x):
        acc |= rows[v] & ~(1 << v)
    return popcount(acc) >= popcount(x)


def _max_matching(rows, n):
    """Kuhn's augmenting paths; returns (mate_left, mate_right)."""
    mate_l = [-1] * n
    mate_r = [-1] * n

    def augment(u, seen):
        r = rows[u] & ~seen[0]
        while r:
            low = r & -r
            v = low.bit_length() - 1
            seen[0] |= low
            if mate_r[v] == -1 or augment(mate_r[v], seen):
                mate_l[u] = v
                mate_r[v] = u
                return True
            r = rows[u] & ~seen[0]
        return False

    # cheap greedy pass first
    for u in range(n):
        r = rows[u]
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if mate_r[v] == -1:
                mate_l[u] = v
                mate_r[v] = u
                break
            r ^= low
    for u in range(n):
        if mate_l[u] == -1:
            augment(u, [0])
    return mate_l, mate_r


def factor_rows(out_rows, n):
    """Successor list of a cycle factor, or an out-side deficient set (int)."""
    rows = _loopless(out_rows)
    mate_l, mate_r = _max_matching(rows, n)
    if -1 not in mate_l:
        return mate_l
    # alternating reachability from an unmatched left vertex: every right
    # vertex reached is matched, so |N(X)| = |X| - 1
    root = mate_l.index(-1)
    x = 1 << root
    reached = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            r = rows[u] & ~reached
            reached |= r
            for v in iter_bits(r):
                w = mate_r[v]
                if not x >> w & 1:
                    x |= 1 << w
                    nxt.append(w)
        frontier = nxt
    return x


def find_cycle_factor(d: Digraph):
    """A :class:`CycleFactor` of ``d`` or a :class:`HallViolator` proving none exists.

    Cycle factors are perfect matchings between out-copies and in-copies of
    the vertices; if the maximum matching is not perfect, the left vertices
    reachable by alternating paths from an unmatched one form a deficient set.
    """
    if d.n < 2:
        raise ValueError("cycle factors need at least 2 vertices")
    res = factor_rows(d.out_rows, d.n)
    if isinstance(res, list):
        return CycleFactor.from_successors(res)
    return HallViolator(res, OUT)


def has_cycle_factor(d: Digraph) -> bool:
    return d.n >= 2 and isinstance(factor_rows(d.out_rows, d.n), list)


def hamilton_rows(out_rows, in_rows, n):
    """Lexicographically least Hamilton cycle from vertex 0, as a list, or None.

    Depth-first search in ascending neighbour order. Each step checks that
    every unvisited vertex still has a usable in- and out-arc, and follows a
    forced arc when some unvisited vertex can only be entered from the
    current one. Failed (visited set, endpoint) states are memoized.
    """
    if n < 2:
        return None
    out = _loopless(out_rows)
    inn = _loopless(in_rows)
    if not all(out) or not all(inn):
        return None
    full = (1 << n) - 1
    failed = set()
    path = [0]

    def dfs(v, visited):
        if visited == full:
            return bool(out[v] & 1)
        key = (visited, v)
        if key in failed:
            return False
        remaining = full & ~visited
        enter_from = remaining | (1 << v)
        leave_to = remaining | 1
        cand = out[v] & remaining
        vbit = 1 << v
        forced = 0
        for u in iter_bits(remaining):
            preds = inn[u] & enter_from
            if not preds or not out[u] & leave_to:
                failed.add(key)
                return False
            if preds == vbit:
                forced |= 1 << u
        if forced:
            # only one vertex can be entered next from v
            if forced & (forced - 1):
                failed.add(key)
                return False
            cand &= forced
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            if dfs(w, visited | low):
                return True
            path.pop()
            cand ^= low
        failed.add(key)
        return False

    return path if dfs(0, 1) else None


def hamilton_cycle(d: Digraph):
    """Hamilton cycle of ``d`` as a vertex list starting at 0, or None."""
    return hamilton_rows(d.out_rows, d.in_rows, d.n)


def hamilton_cycle_graph(g: UGraph):
    """Hamilton cycle of an undirected graph with at least 3 vertices, or None."""
    if g.n < 3:
        raise ValueError("undirected Hamilton cycles need at least 3 vertices")
    return hamilton_cycle(complete_biorientation(g))


def is_hamilton_cycle(d: Digraph, cycle) -> bool:
    cycle = list(cycle)
    if len(cycle) != d.n or sorted(cycle) != list(range(d.n)) or d.n < 2:
        return False
    return all(d.has_arc(u, cycle[(k + 1) % d.n]) for k, u in enumerate(cycle))


def merge_pair(d: Digraph, f: CycleFactor, u: int, v: int):
    """Join the cycles through ``u`` and ``v`` when both ``u -> v+`` and ``v -> u+`` exist.

    The merged cycle is ``u v+ v++ ... v u+ u++ ... u`` and takes the slot of
    the lower-indexed of the two cycles. Returns None if an arc is missing.
    """
    i, j = f.index[u], f.index[v]
    if i == j:
        raise ValueError(f"{u} and {v} lie on the same cycle")
    us, vs = f.succ[u], f.succ[v]
    if not (d.has_arc(u, vs) and d.has_arc(v, us)):
        return None
    merged = [u] + f.walk(vs, v) + f.walk(us, f.pred[u])
    cycles = list(f.cycles)
    lo, hi = min(i, j), max(i, j)
    cycles[lo] = merged
    del cycles[hi]
    return CycleFactor(f.n, cycles)


def _try_merge(d, f):
    n = f.n
    for u in range(n):
        for v in range(u + 1, n):
            if f.index[u] != f.index[v]:
                g = merge_pair(d, f, u, v)
                if g is not None:
                    return g, (u, v)
    return None, None


def _try_exchange(d, f):
    """Shorten a shortest cycle C1 by rerouting through an arc leaving it.

    Looks for x on C1, y off C1 with x -> y, and z on C1 dominated by both x
    and y-, z not in {x, x+, y}, with z- -> x+. Then C1 and the cycle C2
    through y become ``x+ ... z-`` and ``x y y+ ... y- z z+ ... x``.
    """
    k1 = f.shortest()
    c1 = f.cycles[k1]
    on_c1 = as_mask(c1)
    succ, pred = f.succ, f.pred
    for x in sorted(c1):
        xs = succ[x]
        for y in iter_bits(d.out_rows[x] & ~on_c1):
            ym = pred[y]
            common = d.out_rows[x] & d.out_rows[ym] & on_c1
            for z in iter_bits(common & ~((1 << x) | (1 << xs))):
                zm = pred[z]
                if zm == xs or not d.has_arc(zm, xs):
                    continue
                short = f.walk(xs, zm)
                long = [x] + f.walk(y, ym) + f.walk(z, pred[x])
                k2 = f.index[y]
                cycles = list(f.cycles)
                cycles[k1] = short
                cycles[k2] = long
                return CycleFactor(f.n, cycles), (x, y, z)
    return None, None


@dataclass
class Theorem23Result:
    """Outcome of :func:`theorem23_hamilton`.

    Exactly one of ``cycle`` and ``violation`` is set. ``violation`` is one
    of ``"too_small"``, ``"not_strong"``, ``"not_s_quadrangular"``,
    ``"max_semidegree"``, ``"no_cycle_factor"`` or ``"stuck"``.
    ``trace`` holds ``(step, factor)`` after every improvement, starting
    with ``("initial", factor)``.
    """

    cycle: list | None = None
    violation: str | None = None
    detail: str = ""
    trace: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cycle is not None


def theorem23_hamilton(d: Digraph, check_hypotheses: bool = True, start: CycleFactor | None = None) -> Theorem23Result:
    """Build a Hamilton cycle of a strong s-quadrangular digraph with max semi-degree <= 3.

    Starting from any cycle factor, repeatedly merge two cycles along a pair
    ``u -> v+``, ``v -> u+``; when no merge exists, shorten a shortest cycle
    with the rerouting of :func:`_try_exchange`. The pair (number of cycles,
    shortest cycle length) decreases lexicographically at every step. When
    neither move applies the configuration is returned as ``"stuck"``.

    ``start`` replaces the matching-based initial factor.
    """
    if d.n < 2:
        return Theorem23Result(violation="too_small", detail=f"n={d.n}")
    if check_hypotheses:
        if not is_strong(d):
            return Theorem23Result(violation="not_strong", detail="digraph is not strong")
        delta = max_semidegree(d)
        if delta > 3:
            return Theorem23Result(violation="max_semidegree", detail=f"max semi-degree is {delta} > 3")
        if not is_s_quadrangular(d):
            return Theorem23Result(violation="not_s_quadrangular", detail="digraph is not s-quadrangular")
    f = find_cycle_factor(d) if start is None else start
    if not isinstance(f, HallViolator) and not f.is_valid_for(d):
        raise ValueError("start is not a cycle factor of d")
    if isinstance(f, HallViolator):
        return Theorem23Result(
            violation="no_cycle_factor", detail=f"Hall violator {f.vertices()} on {f.side} side"
        )
    trace = [("initial", f)]
    while len(f) > 1:
        g, where = _try_merge(d, f)
        step = f"merge {where}"
        if g is None:
            g, where = _try_exchange(d, f)
            step = f"exchange {where}"
        if g is None:
            return Theorem23Result(
                violation="stuck",
                detail=f"no merge or exchange applies to {f!r}",
                trace=trace,
            )
        f = g
        trace.append((step, f))
    return Theorem23Result(cycle=list(f.cycles[0]), trace=trace)


__all__ = [
    "OUT",
    "IN",
    "PLUS",
    "MINUS",
    "CycleFactor",
    "HallViolator",
    "Theorem23Result",
    "find_cycle_factor",
    "has_cycle_factor",
    "hall_check",
    "hamilton_cycle",
    "hamilton_cycle_graph",
    "is_hamilton_cycle",
    "merge_pair",
    "theorem23_hamilton",
]
