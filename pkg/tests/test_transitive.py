import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monopath.coloring import OrderedColoring, colex_tuples
from monopath.pathfind import PathNotFound
from monopath.transitive import (
    NotTransitiveError,
    complete_edges,
    extract_clique,
    is_transitive,
    path_edges,
    transitive_closure,
)


def by_max_coloring(n: int, k: int, thresholds: list[int]) -> OrderedColoring:
    """Color each k-subset by which threshold block its maximum falls in."""

    def color(tup):
        for c, t in enumerate(thresholds, start=1):
            if tup[-1] <= t:
                return c
        return len(thresholds) + 1

    cols = np.array([color(t) for t in colex_tuples(n, k)])
    return OrderedColoring(k, len(thresholds) + 1, n, cols)


class TestIsTransitive:
    def test_single_color(self):
        c = OrderedColoring(2, 1, 5, np.ones(10, dtype=int))
        assert is_transitive(c) is True

    def test_parity_counterexample(self):
        cols = np.array([1 if (j - i) % 2 else 2 for (i, j) in colex_tuples(4, 2)])
        c = OrderedColoring(2, 2, 4, cols)
        assert is_transitive(c) == ((1, 2, 3), 1)

    def test_by_max_is_transitive(self):
        for k in (2, 3):
            c = by_max_coloring(7, k, [4])
            assert is_transitive(c) is True

    def test_geometry_colorings_transitive(self):
        from monopath.geometry import color_triples, random_family

        fam = random_family(7, seed=3)
        assert is_transitive(color_triples(fam)) is True


class TestClosure:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_path_closure_is_complete(self, k):
        for n in range(k + 1, 9):
            assert transitive_closure(path_edges(n, k)) == complete_edges(n, k)

    def test_single_edge_fixed(self):
        assert transitive_closure({(1, 2, 3)}) == {(1, 2, 3)}

    def test_disjoint_edges_fixed(self):
        assert transitive_closure({(1, 2), (4, 5)}) == {(1, 2), (4, 5)}

    def test_empty(self):
        assert transitive_closure(set()) == set()

    @settings(max_examples=40, deadline=None)
    @given(
        k=st.integers(2, 3),
        seed=st.integers(0, 10**6),
    )
    def test_idempotent_and_monotone(self, k, seed):
        rng = random.Random(seed)
        universe = list(combinations(range(1, 7), k))
        edges = {e for e in universe if rng.random() < 0.3}
        small = {e for e in edges if rng.random() < 0.5}
        closed = transitive_closure(edges)
        assert transitive_closure(closed) == closed
        assert transitive_closure(small) <= closed

    def test_closure_is_transitive_family(self):
        rng = random.Random(5)
        universe = list(combinations(range(1, 7), 3))
        edges = {e for e in universe if rng.random() < 0.4}
        closed = transitive_closure(edges)
        for tup in combinations(range(1, 7), 4):
            if tup[:-1] in closed and tup[1:] in closed:
                assert all(sub in closed for sub in combinations(tup, 3))


class TestExtractClique:
    def test_single_color_prefix(self):
        c = OrderedColoring(3, 1, 6, np.ones(20, dtype=int))
        assert extract_clique(c, 4) == ((1, 2, 3, 4), 1)

    def test_by_max_gives_block_clique(self):
        c = by_max_coloring(8, 3, [6])
        clique, color = extract_clique(c, 5)
        assert len(clique) == 5
        for sub in combinations(clique, 3):
            assert c.color_of(sub) == color

    def test_rejects_non_transitive(self):
        cols = np.array([1 if (j - i) % 2 else 2 for (i, j) in colex_tuples(4, 2)])
        c = OrderedColoring(2, 2, 4, cols)
        with pytest.raises(NotTransitiveError):
            extract_clique(c, 3)

    def test_no_path_raises(self):
        c = by_max_coloring(6, 2, [3])
        with pytest.raises(PathNotFound):
            extract_clique(c, 6)

    def test_many_random_transitive_fixtures(self):
        rng = random.Random(1)
        for _ in range(50):
            n = rng.randint(5, 9)
            k = rng.randint(2, min(3, n - 2))
            cut = rng.randint(k, n - 1)
            c = by_max_coloring(n, k, [cut])
            target = max(k, min(cut, n - cut) + k - 1)
            clique, color = extract_clique(c, target)
            for sub in combinations(clique, k):
                assert c.color_of(sub) == color
