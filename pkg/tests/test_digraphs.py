import io
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monopath.coloring import OrderedGraph, longest_mono_paths_graph
from monopath.digraphs import (
    UNBOUNDED,
    CapExceeded,
    DigraphColoring,
    f_exact,
    lift_digraph_to_graph,
    longest_mono_walks,
    lowf_witness,
    read_digraph,
    walk_length_oracle,
    walkfree_witness,
    write_digraph,
)


def random_digraph(q: int, n: int, seed: int) -> DigraphColoring:
    rng = random.Random(seed)
    return DigraphColoring(
        q, n, np.array([rng.randint(1, q) for _ in range(n * (n - 1))], dtype=np.int32)
    )


class TestWalks:
    def test_two_cycle_unbounded(self):
        d = DigraphColoring.from_function(1, 2, lambda a, b: 1)
        assert longest_mono_walks(d).is_unbounded(1)

    def test_split_pair(self):
        d = DigraphColoring.from_function(2, 2, lambda a, b: 1 if (a, b) == (1, 2) else 2)
        assert longest_mono_walks(d).per_color == (2, 2)

    def test_lowf_2_3_both_three(self):
        w = longest_mono_walks(lowf_witness(2, 3))
        assert w.per_color == (3, 3)

    @settings(max_examples=40, deadline=None)
    @given(q=st.integers(1, 3), n=st.integers(1, 5), seed=st.integers(0, 10**6))
    def test_matches_matrix_power_oracle(self, q, n, seed):
        d = random_digraph(q, n, seed)
        walks = longest_mono_walks(d)
        for c in range(1, q + 1):
            assert walks.length(c) == walk_length_oracle(d, c, cap=n + 2)


class TestLowfWitness:
    @pytest.mark.parametrize("q", [2, 3, 4])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_walk_bounds(self, q, n):
        d = lowf_witness(q, n)
        assert d.n_vertices == n ** (q - 1)
        walks = longest_mono_walks(d)
        for c in range(1, q):
            assert walks.length(c) <= n
        assert walks.length(q) <= 1 + (q - 1) * (n - 1)

    def test_q3_n2_example(self):
        d = lowf_witness(3, 2)
        assert d.n_vertices == 4
        walks = longest_mono_walks(d)
        assert walks.length(1) <= 2 and walks.length(2) <= 2
        assert walks.length(3) <= 3

    def test_single_vertex(self):
        d = lowf_witness(2, 1)
        assert d.n_vertices == 1
        assert longest_mono_walks(d).per_color == (1, 1)


class TestFExact:
    def test_small_values(self):
        assert f_exact(2, 2) == 2
        assert f_exact(2, 3) == 3
        assert f_exact(2, 4) == 4
        assert f_exact(3, 3) == 4

    @pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (2, 4), (3, 3)])
    def test_sandwich_bounds(self, q, n):
        f = f_exact(q, n)
        assert (n / q) ** (q - 1) <= f <= (n - 1) ** (q - 1) + 1

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded):
            f_exact(2, 10, cap=3)

    def test_witness_below_is_walkfree(self):
        f = f_exact(3, 3)
        w = walkfree_witness(f - 1, 3, 3)
        assert w is not None
        walks = longest_mono_walks(w)
        assert all(walks.length(c) < 3 for c in (1, 2, 3))
        assert walkfree_witness(f, 3, 3) is None


class TestLift:
    def test_single_edge_gets_phi(self):
        d = lowf_witness(2, 3)
        g = OrderedGraph(2, frozenset({(1, 2)}))
        gc = lift_digraph_to_graph(d, g, [1, 2])
        assert gc.colors[(1, 2)] == d.color(1, 2)

    def test_bipartite_path_bound(self):
        d = lowf_witness(2, 3)
        g = OrderedGraph.complete_bipartite(3, 3)
        gc = lift_digraph_to_graph(d, g, [1, 1, 1, 2, 2, 2])
        maxima = longest_mono_paths_graph(gc)
        assert all(maxima[c][0] <= 3 for c in (1, 2))

    def test_intra_class_edge_rejected(self):
        d = lowf_witness(2, 3)
        g = OrderedGraph(2, frozenset({(1, 2)}))
        with pytest.raises(ValueError, match="not proper"):
            lift_digraph_to_graph(d, g, [1, 1])

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 10**6))
    def test_lifted_paths_bounded_by_walks(self, seed):
        # tripartite ordered graph, classes interleaved
        rng = random.Random(seed)
        n = 9
        parts = [rng.randint(1, 3) for _ in range(n)]
        edges = frozenset(
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if parts[u - 1] != parts[v - 1] and rng.random() < 0.7
        )
        g = OrderedGraph(n, edges)
        d = random_digraph(2, 3, seed)
        walks = longest_mono_walks(d)
        gc = lift_digraph_to_graph(d, g, parts)
        maxima = longest_mono_paths_graph(gc)
        for c in (1, 2):
            if not walks.is_unbounded(c):
                assert maxima[c][0] <= walks.length(c)


class TestFormat:
    def test_round_trip(self):
        d = random_digraph(3, 5, 11)
        buf = io.StringIO()
        write_digraph(d, buf)
        assert read_digraph(io.StringIO(buf.getvalue())) == d

    def test_wrong_count(self):
        with pytest.raises(ValueError, match="wrong count"):
            read_digraph(io.StringIO("2 3\n1 1 1\n"))
