"""Exhaustive and sampled checks of the hamiltonicity conjectures on small (di)graphs.

Arc-mask layout
---------------
digraph, loopless
    bit ``i * (n - 1) + k`` is the arc ``i -> j`` where ``j`` is the ``k``-th
    vertex of ``0..n-1`` other than ``i`` (row-major over ordered pairs i != j).
digraph, loops
    bit ``i * n + j`` is the arc ``i -> j``.
graph
    bit ``k`` is the ``k``-th unordered pair ``i < j`` in row-major order
    ``(0,1), (0,2), ..., (0,n-1), (1,2), ...``.

Masks run from 0 to ``2**bits - 1`` and instances are labeled, not reduced
up to isomorphism.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .cycles import factor_rows, hamilton_rows, is_hamilton_cycle, theorem23_hamilton
from .errors import CapacityError
from .graph import Digraph, UGraph, quadrangular_side, squad_rows, strong_rows, transpose_rows, popcount

DIGRAPH = "digraph"
GRAPH = "graph"

EXHAUSTIVE_LIMIT = 1 << 32
CHUNK = 1 << 14


@dataclass(frozen=True)
class EnumSpace:
    n: int
    loops: bool = False
    mode: str = DIGRAPH

    def __post_init__(self):
        if self.mode not in (DIGRAPH, GRAPH):
            raise ValueError(f"mode must be {DIGRAPH!r} or {GRAPH!r}")
        low = 3 if self.mode == GRAPH else 2
        if not low <= self.n <= 64:
            raise ValueError(f"{self.mode} spaces need {low} <= n <= 64")
        if self.mode == GRAPH and self.loops:
            raise ValueError("graphs have no loops")

    @property
    def bits(self) -> int:
        n = self.n
        if self.mode == GRAPH:
            return n * (n - 1) // 2
        return n * n if self.loops else n * (n - 1)

    @property
    def size(self) -> int:
        return 1 << self.bits

    def decode(self, mask: int):
        """Adjacency rows encoded by ``mask``."""
        return _decoder(self)(mask)

    def instance(self, mask: int):
        rows = self.decode(mask)
        if self.mode == GRAPH:
            return UGraph(self.n, rows)
        return Digraph(self.n, rows)

    def encode(self, g) -> int:
        n = self.n
        mask = 0
        if self.mode == GRAPH:
            k = 0
            for i in range(n):
                for j in range(i + 1, n):
                    if g.rows[i] >> j & 1:
                        mask |= 1 << k
                    k += 1
            return mask
        width = n if self.loops else n - 1
        for i, row in enumerate(g.out_rows):
            if self.loops:
                chunk = row
            else:
                if row >> i & 1:
                    raise ValueError("loop in a loopless space")
                chunk = (row & ((1 << i) - 1)) | (row >> (i + 1) << i)
            mask |= chunk << (i * width)
        return mask


def _decoder(space):
    n = space.n
    if space.mode == DIGRAPH and not space.loops:
        width = n - 1
        wmask = (1 << width) - 1
        lows = [(1 << i) - 1 for i in range(n)]

        def decode(mask):
            rows = []
            for i in range(n):
                chunk = (mask >> (i * width)) & wmask
                rows.append((chunk & lows[i]) | ((chunk >> i) << (i + 1)))
            return rows

        return decode
    if space.mode == DIGRAPH:
        wmask = (1 << n) - 1
        return lambda mask: [(mask >> (i * n)) & wmask for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def decode_graph(mask):
        rows = [0] * n
        k = 0
        while mask:
            if mask & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            mask >>= 1
            k += 1
        return rows

    return decode_graph


def enumerate_space(space: EnumSpace) -> Iterator:
    """Every labeled instance of ``space`` in ascending mask order."""
    if space.size > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"space has 2^{space.bits} instances; sample it instead")
    for mask in range(space.size):
        yield space.instance(mask)


@dataclass
class VerificationReport:
    """Counters from one run. For graphs ``strong`` counts connected instances.

    The ``cross_*`` counters are filled only when cross-checks are requested:
    cycle factors found for strong s-quadrangular instances, and for those with
    maximum semi-degree at most 3, how many were solved by the constructive
    merge/exchange procedure.
    """

    space: EnumSpace
    total: int = 0
    strong: int = 0
    squad: int = 0
    hamiltonian: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0
    threads: int = 1
    cross_factor: int = 0
    cross_factor_fail: list = field(default_factory=list)
    cross_delta3: int = 0
    cross_theorem23: int = 0
    cross_theorem23_fail: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> None:
        self.total += other.total
        self.strong += other.strong
        self.squad += other.squad
        self.hamiltonian += other.hamiltonian
        self.counterexamples.extend(other.counterexamples)
        self.cross_factor += other.cross_factor
        self.cross_factor_fail.extend(other.cross_factor_fail)
        self.cross_delta3 += other.cross_delta3
        self.cross_theorem23 += other.cross_theorem23
        self.cross_theorem23_fail.extend(other.cross_theorem23_fail)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "mode": self.space.mode,
            "n": self.space.n,
            "loops": self.space.loops,
            "total": self.total,
            "strong": self.strong,
            "squad": self.squad,
            "hamiltonian": self.hamiltonian,
            "counterexamples": [format(m, "x") for m in self.counterexamples],
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
            d["threads"] = self.threads
        return d

    def to_json(self, timing: bool = True) -> str:
        """The JSON report; ``timing=False`` drops the run-dependent keys."""
        return json.dumps(self.to_dict(timing))


def _theorem23_checked(d):
    """Run the constructive procedure and re-validate every step of it."""
    res = theorem23_hamilton(d)
    if not res.ok or not is_hamilton_cycle(d, res.cycle):
        return False
    measures = []
    for _, f in res.trace:
        if not f.is_valid_for(d):
            return False
        measures.append((len(f), min(len(c) for c in f.cycles)))
    return all(a > b for a, b in zip(measures, measures[1:]))


def _scan(space, masks, cross_check):
    """Run the filter pipeline over an iterable of masks."""
    n = space.n
    decode = _decoder(space)
    full = (1 << n) - 1
    graph = space.mode == GRAPH
    rep = VerificationReport(space)
    total = strong = squad = ham = 0
    for mask in masks:
        total += 1
        rows = decode(mask)
        if not all(rows):
            continue
        if graph:
            if not strong_rows(rows, rows, n):
                continue
            strong += 1
            if not quadrangular_side(rows, n):
                continue
            inn = rows
        else:
            acc = 0
            for r in rows:
                acc |= r
            if acc != full:
                continue
            inn = transpose_rows(rows, n)
            if not strong_rows(rows, inn, n):
                continue
            strong += 1
            if not squad_rows(rows, inn, n):
                continue
            if cross_check:
                _cross(rep, mask, rows, inn, n)
        squad += 1
        if hamilton_rows(rows, inn, n) is not None:
            ham += 1
        else:
            rep.counterexamples.append(mask)
    rep.total, rep.strong, rep.squad, rep.hamiltonian = total, strong, squad, ham
    return rep


def _cross(rep, mask, rows, inn, n):
    if isinstance(factor_rows(rows, n), list):
        rep.cross_factor += 1
    else:
        rep.cross_factor_fail.append(mask)
    delta = max(max(popcount(r) for r in rows), max(popcount(r) for r in inn))
    if delta <= 3:
        rep.cross_delta3 += 1
        if _theorem23_checked(Digraph(n, rows)):
            rep.cross_theorem23 += 1
        else:
            rep.cross_theorem23_fail.append(mask)


def _scan_range(args):
    space, lo, hi, cross_check = args
    return _scan(space, range(lo, hi), cross_check)


def _scan_list(args):
    space, masks, cross_check = args
    return _scan(space, masks, cross_check)


def _run(space, jobs, worker, threads):
    report = VerificationReport(space, threads=threads)
    if threads <= 1:
        parts = map(worker, jobs)
        for part in parts:
            report.merge(part)
        return report
    with ProcessPoolExecutor(max_workers=threads) as pool:
        # map yields in submission order, so the fold is deterministic
        for part in pool.map(worker, jobs, chunksize=4):
            report.merge(part)
    return report


def verify_conjecture(space: EnumSpace, threads: int = 1, cross_check: bool = False) -> VerificationReport:
    """Exhaustively test that every strong s-quadrangular instance is hamiltonian.

    Graph spaces test connected s-quadrangular graphs for undirected Hamilton
    cycles instead. Counters and counterexamples do not depend on ``threads``.
    """
    if space.size > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"space has 2^{space.bits} instances; use sample_verify")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    start = time.perf_counter()
    jobs = [(space, lo, min(lo + CHUNK, space.size), cross_check) for lo in range(0, space.size, CHUNK)]
    report = _run(space, jobs, _scan_range, threads)
    report.elapsed = time.perf_counter() - start
    return report


def sample_masks(space: EnumSpace, count: int, seed: int) -> list[int]:
    """``count`` uniform arc masks drawn with :class:`random.Random` seeded by ``seed``."""
    rng = random.Random(seed)
    return [rng.getrandbits(space.bits) for _ in range(count)]


def sample_verify(space: EnumSpace, count: int, seed: int, threads: int = 1,
                  cross_check: bool = False) -> VerificationReport:
    """Same pipeline as :func:`verify_conjecture` over ``count`` sampled masks."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    start = time.perf_counter()
    masks = sample_masks(space, count, seed)
    jobs = [(space, masks[lo:lo + CHUNK], cross_check) for lo in range(0, count, CHUNK)]
    report = _run(space, jobs, _scan_list, threads)
    report.elapsed = time.perf_counter() - start
    return report


def default_threads() -> int:
    return os.cpu_count() or 1
