"""Exhaustive backtracking search for exact small Ramsey values and witnesses.

exists_witness decides whether some q-coloring of all k-subsets of [N] avoids
a monochromatic monotone path of n vertices, assigning edges in colex order
with an incremental ending-tuple length table: a color is forbidden for an
edge as soon as it would complete a path of n vertices.  The first edge is
pinned to color 1 (color-permutation symmetry), which cannot affect
existence.  Exhaustion of the pruned tree is a proof of nonexistence.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from monopath.coloring import MonotonePath, OrderedColoring, colex_tuples


class BudgetExceeded(Exception):
    """Raised by n_exact when the underlying search gives up."""


@dataclass(frozen=True)
class SearchBudget:
    """Optional caps for the backtracking search; exceeding one aborts cleanly
    with a BudgetExhausted outcome, never a wrong answer."""

    node_cap: int | None = None
    time_cap: float | None = None


@dataclass(frozen=True)
class BudgetExhausted:
    """Search gave up: a third outcome, distinct from witness-found and
    proven-nonexistence."""

    nodes: int
    elapsed: float


def _edge_tables(n_vertices: int, k: int) -> tuple[list[int], list[int]]:
    """For each edge (colex order): ranks of its prefix and suffix (k-1)-tuples."""
    rank = {}
    for r, tup in enumerate(colex_tuples(n_vertices, k - 1)):
        rank[tup] = r
    pre, suf = [], []
    for edge in colex_tuples(n_vertices, k):
        pre.append(rank[edge[:-1]])
        suf.append(rank[edge[1:]])
    return pre, suf


def exists_witness(
    n_vertices: int,
    k: int,
    q: int,
    n: int,
    budget: SearchBudget | None = None,
) -> OrderedColoring | None | BudgetExhausted:
    """A coloring of [N] with no monochromatic monotone path of n vertices,
    or None when exhaustive search proves none exists."""
    if n_vertices < k:
        if n_vertices >= n:
            return None  # n <= N <= k-1 vertices already form the path
        return OrderedColoring(k, q, n_vertices, np.zeros(0, dtype=np.int32))
    if n <= min(n_vertices, k - 1):
        return None
    if n_vertices < n:
        n_edges = math.comb(n_vertices, k)
        return OrderedColoring(k, q, n_vertices, np.ones(n_edges, dtype=np.int32))

    budget = budget or SearchBudget()
    pre, suf = _edge_tables(n_vertices, k)
    n_edges = len(pre)
    n_tuples = math.comb(n_vertices, k - 1)
    lens = [k - 1] * (n_tuples * q)
    assignment = [0] * n_edges
    start = time.monotonic()
    nodes = 0
    node_cap = budget.node_cap
    time_cap = budget.time_cap

    class _Stop(Exception):
        pass

    def rec(e: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise _Stop
        if time_cap is not None and nodes % 4096 == 0:
            if time.monotonic() - start > time_cap:
                raise _Stop
        if e == n_edges:
            return True
        p_base = pre[e] * q
        s_base = suf[e] * q
        trial = range(1) if (e == 0 and q > 1) else range(q)
        for c in trial:
            grown = lens[p_base + c] + 1
            if grown >= n:
                continue  # this color would complete a path of n vertices
            s = s_base + c
            old = lens[s]
            if grown > old:
                lens[s] = grown
            assignment[e] = c + 1
            if rec(e + 1):
                return True
            lens[s] = old
        return False

    try:
        found = rec(0)
    except _Stop:
        return BudgetExhausted(nodes, time.monotonic() - start)
    if not found:
        return None
    out = OrderedColoring(k, q, n_vertices, np.array(assignment, dtype=np.int32))
    from monopath.coloring import longest_mono_paths

    _, summary = longest_mono_paths(out)  # soundness: re-check the pruned DP
    assert all(summary[c][0] < n for c in range(1, q + 1)), summary
    return out


def n_exact(k: int, q: int, n: int, budget: SearchBudget | None = None) -> int:
    """The least N forcing a monochromatic monotone path of n vertices: one
    more than the largest witness size."""
    n_vertices = max(n, k)
    while True:
        out = exists_witness(n_vertices, k, q, n, budget)
        if out is None:
            return n_vertices
        if isinstance(out, BudgetExhausted):
            raise BudgetExceeded(
                f"search at N={n_vertices} exhausted budget after {out.nodes} nodes"
            )
        n_vertices += 1


def tower(i: int, x: int, n: int) -> int:
    """t_1(x, n) = x and t_{i+1}(x, n) = n ** t_i(x, n), arbitrary precision."""
    if i < 1:
        raise ValueError("tower height must be >= 1")
    value = x
    for _ in range(i - 1):
        value = n**value
    return value


def recursive_upper_bound(k: int, q: int, n: int) -> int:
    """Exact value of the recursion N_k(q,n) <= N_{k-1}((n-k+1)^(q-1), n)
    unwound to the base N_2(q,n) = (n-1)^q + 1."""
    if k < 2 or q < 1 or n < k:
        raise ValueError("need k >= 2, q >= 1, n >= k")
    if k == 2:
        return (n - 1) ** q + 1
    return recursive_upper_bound(k - 1, (n - k + 1) ** (q - 1), n)
