"""Transitive colorings: checking, closure, and path-to-clique promotion.

A family of k-subsets is transitive when any two consecutive windows
{i_1..i_k}, {i_2..i_{k+1}} inside a (k+1)-set pull in every k-subset of that
set.  In a transitive coloring a monochromatic monotone path therefore spans
a monochromatic clique, which is what the geometric application consumes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from monopath.coloring import MonotonePath, OrderedColoring, longest_mono_paths
from monopath.pathfind import PathNotFound


class NotTransitiveError(ValueError):
    """extract_clique requires a transitive coloring."""


def is_transitive(coloring: OrderedColoring) -> bool | tuple[tuple[int, ...], int]:
    """True, or a violating ((k+1)-tuple, color) pair.

    A violation is a (k+1)-set whose two consecutive windows share a color
    that some other k-subset of the set does not carry.
    """
    k, n = coloring.k, coloring.n_vertices
    for tup in combinations(range(1, n + 1), k + 1):
        first = coloring.color_of(tup[:-1])
        second = coloring.color_of(tup[1:])
        if first != second:
            continue
        for sub in combinations(tup, k):
            if coloring.color_of(sub) != first:
                return tup, first
    return True


def transitive_closure(edges: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Minimal transitive superset of a set of k-subsets.

    Worklist over (k+1)-tuples built from an edge plus one extra vertex: when
    both consecutive windows of such a tuple are present, all its k-subsets
    join the set.  Vertices range over the union of the edge supports.
    """
    current = {tuple(e) for e in edges}
    if not current:
        return current
    sizes = {len(e) for e in current}
    if len(sizes) != 1:
        raise ValueError("edges must be k-subsets of one uniformity")
    (k,) = sizes
    for e in current:
        if list(e) != sorted(set(e)):
            raise ValueError(f"bad edge {e}")
    vertices = sorted({v for e in current for v in e})
    work = list(current)
    while work:
        edge = work.pop()
        for v in vertices:
            if v in edge:
                continue
            tup = tuple(sorted(edge + (v,)))
            if tup[:-1] in current and tup[1:] in current:
                for sub in combinations(tup, k):
                    if sub not in current:
                        current.add(sub)
                        work.append(sub)
    return current


def extract_clique(coloring: OrderedColoring, n: int) -> tuple[tuple[int, ...], int]:
    """n vertices all of whose k-subsets share one color, from a transitive
    coloring with a monochromatic monotone path of n vertices.

    The clique is the vertex set of a longest-path witness; completeness is
    re-verified subset by subset rather than trusted.
    """
    verdict = is_transitive(coloring)
    if verdict is not True:
        raise NotTransitiveError(f"counterexample {verdict}")
    if n <= coloring.k - 1:
        if coloring.n_vertices < n:
            raise PathNotFound(f"only {coloring.n_vertices} vertices available")
        return tuple(range(1, n + 1)), 1
    _, summary = longest_mono_paths(coloring)
    for c in range(1, coloring.q + 1):
        length, witness = summary[c]
        if length >= n:
            clique = witness.vertices[:n]
            for sub in combinations(clique, coloring.k):
                if coloring.color_of(sub) != c:
                    raise AssertionError(
                        f"transitive promotion failed on {sub} (color {c})"
                    )
            return clique, c
    raise PathNotFound(f"no monochromatic monotone path of {n} vertices")


def path_edges(n: int, k: int) -> set[tuple[int, ...]]:
    """The n-k+1 consecutive windows of the monotone path on [n]."""
    return {tuple(range(i, i + k)) for i in range(1, n - k + 2)}


def complete_edges(n: int, k: int) -> set[tuple[int, ...]]:
    return set(combinations(range(1, n + 1), k))
