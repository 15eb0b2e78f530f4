import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import random_digraph, random_ugraph
from squad.cycles import hamilton_cycle_graph
from squad.errors import CapacityError
from squad.graph import is_s_quadrangular_graph
from squad.verify import (
    DIGRAPH,
    GRAPH,
    EnumSpace,
    enumerate_space,
    sample_masks,
    sample_verify,
    verify_conjecture,
)

# (strong, s-quadrangular, hamiltonian) from the definition-literal oracle
FROZEN = {2: (1, 1, 1), 3: (18, 2, 2), 4: (1606, 22, 22)}
JSON_KEYS = ["mode", "n", "loops", "total", "strong", "squad", "hamiltonian",
             "counterexamples", "elapsed_seconds", "threads"]


class TestEnumSpace:
    @pytest.mark.parametrize("n,size", [(2, 4), (3, 64), (5, 1 << 20)])
    def test_sizes(self, n, size):
        assert EnumSpace(n).size == size

    def test_looped_and_graph_sizes(self):
        assert EnumSpace(3, loops=True).size == 1 << 9
        assert EnumSpace(4, mode=GRAPH).size == 1 << 6

    def test_enumerate_n2(self):
        arcs = [d.arcs() for d in enumerate_space(EnumSpace(2))]
        assert arcs == [[], [(0, 1)], [(1, 0)], [(0, 1), (1, 0)]]

    def test_enumerate_count(self):
        assert sum(1 for _ in enumerate_space(EnumSpace(3))) == 64

    def test_enumerate_capacity(self):
        with pytest.raises(CapacityError):
            next(enumerate_space(EnumSpace(7)))

    def test_bad_spaces(self):
        with pytest.raises(ValueError):
            EnumSpace(1)
        with pytest.raises(ValueError):
            EnumSpace(2, mode=GRAPH)
        with pytest.raises(ValueError):
            EnumSpace(4, loops=True, mode=GRAPH)
        with pytest.raises(ValueError):
            EnumSpace(4, mode="hypergraph")

    def test_layout(self):
        # loopless: bit i*(n-1)+k is the k-th non-self target of vertex i
        assert EnumSpace(3).instance(0b000100).arcs() == [(1, 0)]
        assert EnumSpace(3, loops=True).instance(1 << 4).arcs() == [(1, 1)]
        assert EnumSpace(3, mode=GRAPH).instance(0b100).edges() == [(1, 2)]

    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 7), st.booleans(), st.randoms(use_true_random=False))
    def test_encode_decode_roundtrip(self, n, loops, r):
        space = EnumSpace(n, loops=loops)
        d = random_digraph(r, n, loops=loops)
        assert space.instance(space.encode(d)) == d
        mask = r.getrandbits(space.bits)
        assert space.encode(space.instance(mask)) == mask

    @settings(max_examples=100, deadline=None)
    @given(st.integers(3, 8), st.randoms(use_true_random=False))
    def test_graph_roundtrip(self, n, r):
        space = EnumSpace(n, mode=GRAPH)
        g = random_ugraph(r, n)
        assert space.instance(space.encode(g)) == g


class TestVerifyConjecture:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_frozen_counts(self, n):
        rep = verify_conjecture(EnumSpace(n))
        assert (rep.strong, rep.squad, rep.hamiltonian) == FROZEN[n]
        assert rep.total == EnumSpace(n).size
        assert rep.counterexamples == []

    def test_oracle_still_agrees(self):
        assert oracles.conjecture_counts(3) == FROZEN[3]

    def test_looped_n4(self):
        rep = verify_conjecture(EnumSpace(4, loops=True))
        assert rep.holds
        assert rep.hamiltonian == rep.squad <= rep.strong <= rep.total == 1 << 16

    def test_thread_determinism(self):
        space = EnumSpace(4, loops=True)
        reports = [verify_conjecture(space, threads=k) for k in (1, 2, 4)]
        assert len({r.to_json(timing=False) for r in reports}) == 1
        assert [r.threads for r in reports] == [1, 2, 4]

    def test_cross_check(self):
        rep = verify_conjecture(EnumSpace(4), cross_check=True)
        assert rep.cross_factor == rep.squad and rep.cross_factor_fail == []
        assert rep.cross_theorem23 == rep.cross_delta3 > 0 and rep.cross_theorem23_fail == []

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_graph_mode(self, n):
        rep = verify_conjecture(EnumSpace(n, mode=GRAPH))
        assert rep.holds
        assert rep.hamiltonian == rep.squad <= rep.strong <= rep.total

    def test_graph_mode_counts_by_hand(self):
        # connected s-quadrangular graphs on 4 labeled vertices, counted directly
        space = EnumSpace(4, mode=GRAPH)
        connected = squad = 0
        for mask in range(space.size):
            g = space.instance(mask)
            if g.is_connected():
                connected += 1
                if is_s_quadrangular_graph(g):
                    squad += 1
                    assert hamilton_cycle_graph(g) is not None
        rep = verify_conjecture(space)
        assert (rep.strong, rep.squad) == (connected, squad)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            verify_conjecture(EnumSpace(7))

    def test_bad_threads(self):
        with pytest.raises(ValueError):
            verify_conjecture(EnumSpace(2), threads=0)

    def test_json_schema(self):
        rep = verify_conjecture(EnumSpace(3))
        d = json.loads(rep.to_json())
        assert list(d) == JSON_KEYS
        assert d["counterexamples"] == [] and d["total"] == 64
        assert list(json.loads(rep.to_json(timing=False))) == JSON_KEYS[:-2]


class TestSampleVerify:
    def test_count_zero(self):
        rep = sample_verify(EnumSpace(5), 0, seed=1)
        assert (rep.total, rep.strong, rep.squad, rep.hamiltonian) == (0, 0, 0, 0)

    def test_seed_stability(self):
        a = sample_verify(EnumSpace(6), 2000, seed=9)
        b = sample_verify(EnumSpace(6), 2000, seed=9)
        assert a.to_json(timing=False) == b.to_json(timing=False)
        assert sample_masks(EnumSpace(6), 5, 9) == sample_masks(EnumSpace(6), 5, 9)
        assert sample_masks(EnumSpace(6), 5, 9) != sample_masks(EnumSpace(6), 5, 10)

    def test_bounded_by_exhaustive(self):
        rep = sample_verify(EnumSpace(4), 1000, seed=3)
        assert rep.total == 1000
        assert rep.strong <= 1000 and rep.hamiltonian == rep.squad <= rep.strong

    def test_masks_in_range(self):
        space = EnumSpace(4)
        assert all(0 <= m < space.size for m in sample_masks(space, 500, 1))

    def test_threads(self):
        space = EnumSpace(5)
        a = sample_verify(space, 40_000, seed=2, threads=1)
        b = sample_verify(space, 40_000, seed=2, threads=2)
        assert a.to_json(timing=False) == b.to_json(timing=False)

    def test_negative_count(self):
        with pytest.raises(ValueError):
            sample_verify(EnumSpace(3), -1, seed=0)

    def test_uniform_masks(self):
        # each arc bit is set in roughly half of the samples
        space = EnumSpace(4)
        masks = sample_masks(space, 4000, seed=random.Random(0).randint(0, 99))
        for b in range(space.bits):
            share = sum(m >> b & 1 for m in masks) / len(masks)
            assert 0.45 < share < 0.55
