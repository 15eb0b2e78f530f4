import random
import sys
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from squad.graph import Digraph, UGraph  # noqa: E402


def random_digraph(rng, n, p=None, loops=False):
    p = rng.random() if p is None else p
    arcs = [(u, v) for u in range(n) for v in range(n) if (loops or u != v) and rng.random() < p]
    return Digraph.from_arcs(n, arcs)


def random_ugraph(rng, n, p=None):
    p = rng.random() if p is None else p
    return UGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def from_nx(h):
    mapping = {v: i for i, v in enumerate(sorted(h.nodes))}
    return UGraph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges])


def atlas_graphs(min_n=1, max_n=7):
    """All graphs on min_n..max_n vertices up to isomorphism (networkx atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def obstruction_candidates(rng, n):
    """Random graphs of minimum degree >= 2 biased towards having no 2-factor.

    Either an unbalanced bipartite graph (any edges added inside the small
    side) or a few blocks hanging off a small hub set.
    """
    if rng.random() < 0.5:
        a = rng.randint(2, max(2, (n - 1) // 2))
        small, big = list(range(a)), list(range(a, n))
        edges = set()
        for v in big:
            for u in rng.sample(small, 2):
                edges.add((min(u, v), max(u, v)))
        for u in small:
            for v in big:
                if rng.random() < 0.3:
                    edges.add((u, v))
        for u in small:
            for v in small:
                if u < v and rng.random() < 0.3:
                    edges.add((u, v))
        return UGraph.from_edges(n, edges)
    hubs = rng.randint(1, 2)
    rest = list(range(hubs, n))
    rng.shuffle(rest)
    blocks = []
    while rest:
        k = min(len(rest), rng.randint(2, 4))
        blocks.append(rest[:k])
        rest = rest[k:]
    edges = set()
    for b in blocks:
        for i in range(1, len(b)):
            u, v = b[i], rng.choice(b[:i])
            edges.add((min(u, v), max(u, v)))
        for u in b:
            for v in b:
                if u < v and rng.random() < 0.5:
                    edges.add((u, v))
        for h in range(hubs):
            for u in rng.sample(b, min(len(b), rng.randint(1, 2))):
                edges.add((h, u))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.03:
                edges.add((u, v))
    return UGraph.from_edges(n, edges)


@pytest.fixture
def bowtie():
    # centre 0, triangles 0-1-2 and 0-3-4
    return UGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture
def rng():
    return random.Random(20240601)


def givens_unitary(rng, n, k):
    """Row-permuted product of k random complex Givens rotations: a sparse unitary."""
    u = np.eye(n, dtype=complex)
    for _ in range(k):
        i, j = rng.sample(range(n), 2)
        th, ph = rng.uniform(0.3, 1.2), rng.uniform(0, 2 * np.pi)
        g = np.eye(n, dtype=complex)
        c, s = np.cos(th), np.sin(th)
        g[i, i] = g[j, j] = c
        g[i, j] = -s * np.exp(1j * ph)
        g[j, i] = s * np.exp(-1j * ph)
        u = g @ u
    p = list(range(n))
    rng.shuffle(p)
    return u[p]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
