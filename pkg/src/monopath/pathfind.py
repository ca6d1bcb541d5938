"""Constructive path finders realizing the two upper-bound arguments.

find_path_recursive mirrors the recursion N_k(q, n) <= N_{k-1}((n-k+1)^(q-1), n):
color each (k-1)-tuple by the vector of longest path lengths in colors
1..q-1 ending there; a path monochromatic in that auxiliary coloring is a
color-q path in the original, because any color-i edge on it would let the
color-i length grow along the path.

find_path_online_reduction mirrors the online-game bound
N_k(q, n) <= q^(V_{k-1}(q, n+k-2)) + k-2: grow labeled vertices, keep a
survivor set consistent with every auxiliary edge's majority color, and drive
the auxiliary (k-1)-uniform game with a winning builder until it contains a
monochromatic monotone path, which then lifts to the oracle coloring.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from monopath.coloring import (
    MonotonePath,
    OrderedColoring,
    colex_tuples,
    longest_mono_paths,
    verify_path,
)
from monopath.games import _PathTracker


class PathNotFound(Exception):
    """No monochromatic monotone path of the requested length was found."""


class SurvivorsExhausted(Exception):
    """The online reduction ran out of survivors (N too small for this play)."""


def recursive_threshold(k: int, q: int, n: int) -> int:
    """Vertex count at which the recursive finder is guaranteed to succeed."""
    from monopath.search import recursive_upper_bound

    return recursive_upper_bound(k, q, n)


def find_path_recursive(coloring: OrderedColoring, n: int) -> MonotonePath:
    """A monochromatic monotone path of exactly n vertices, by the recursive
    auxiliary-coloring argument (base case k=2 reads the DP directly).

    Raises PathNotFound when the recursion bottoms out; any returned path is
    verified before returning.
    """
    k, q, big_n = coloring.k, coloring.q, coloring.n_vertices
    if n <= k - 1:
        if big_n < n:
            raise PathNotFound(f"only {big_n} vertices available")
        return MonotonePath(tuple(range(1, n + 1)), 1)
    table, summary = longest_mono_paths(coloring)
    for c in range(1, q + 1):
        length, witness = summary[c]
        if length >= n:
            path = MonotonePath(witness.vertices[:n], c)
            assert verify_path(coloring, path)
            return path
    if k == 2:
        raise PathNotFound(f"no color reaches {n} vertices on {big_n} vertices")

    # phi: (k-1)-tuples -> mixed-radix code of (n_1, ..., n_{q-1}), n_i in [k-1, n-1]
    radix = n - k + 1
    aux_q = max(radix ** (q - 1), 1)
    m = table.lengths.shape[0]
    code = np.zeros(m, dtype=np.int64)
    weight = 1
    for i in range(q - 1):
        digits = table.lengths[:, i].astype(np.int64) - (k - 1)
        assert digits.min() >= 0 and digits.max() < radix
        code += digits * weight
        weight *= radix
    aux = OrderedColoring(k - 1, aux_q, big_n, code + 1)
    sub = find_path_recursive(aux, n)
    path = MonotonePath(sub.vertices, q)
    if not verify_path(coloring, path):
        raise AssertionError("auxiliary path did not lift to a color-q path")
    return path


class RandomColorOracle:
    """Deterministic seeded color oracle over k-subsets; never materializes a
    table, so N ~ 2^15 stays cheap."""

    def __init__(self, q: int, seed: int = 0):
        self.q = q
        self.seed = seed

    def __call__(self, subset: tuple[int, ...]) -> int:
        # crc-style checksums are linear and correlate across fixed prefixes;
        # a real hash keeps majority filters independent between stages
        data = (str(self.seed) + ":" + ",".join(map(str, subset))).encode()
        digest = hashlib.blake2b(data, digest_size=8).digest()
        return int.from_bytes(digest, "big") % self.q + 1


@dataclass(frozen=True)
class ReductionEdge:
    prefix: tuple[int, ...]  # stage indices of the auxiliary edge (minus v_t)
    color: int
    survivors_after: int


@dataclass
class ReductionStage:
    t: int
    vertex_label: int
    survivors_at_start: int
    edges: list[ReductionEdge] = field(default_factory=list)


@dataclass
class ReductionTranscript:
    k: int
    q: int
    n: int
    big_n: int
    stages: list[ReductionStage] = field(default_factory=list)

    @property
    def total_edges(self) -> int:
        return sum(len(s.edges) for s in self.stages)

    def audit_survivors(self) -> bool:
        """|S_{t+1}| >= (|S_t| - 1) / q^{m_{t+1}} at every stage."""
        for stage in self.stages:
            size = stage.survivors_at_start
            m = len(stage.edges)
            if stage.edges:
                final = stage.edges[-1].survivors_after
                if final < (size - 1) / self.q**m:
                    return False
        return True


def find_path_online_reduction(
    chi: Callable[[tuple[int, ...]], int],
    k: int,
    q: int,
    n: int,
    builder,
    big_n: int,
) -> tuple[MonotonePath, ReductionTranscript]:
    """Find a monochromatic monotone path of n vertices in an oracle coloring
    of the k-subsets of [big_n], playing the modified (k-1)-uniform online
    game against the majority painter.

    builder is an online-game builder for uniformity k-1 (for k = 3, adapt a
    winning lattice builder).  Majority ties break toward the lowest color id.
    Returns the verified path plus the audited transcript.
    """
    if k < 3:
        raise ValueError("the reduction needs k >= 3")
    tracker = _PathTracker(k - 1, q)
    tr = ReductionTranscript(k, q, n, big_n)
    labels: list[int] = []  # labels[t-1] = actual vertex id of v_t
    survivors = list(range(1, big_n + 1))
    win: tuple[tuple[int, ...], int] | None = None

    for t in range(1, big_n + 1):
        if not survivors:
            raise SurvivorsExhausted(f"no survivors at stage {t}")
        v_t = survivors.pop(0)
        labels.append(v_t)
        stage = ReductionStage(t, v_t, len(survivors))
        tr.stages.append(stage)
        builder.start_stage(t)
        while True:
            prefix = builder.propose()
            if prefix is None:
                break
            if len(prefix) != k - 2 or any(i >= t for i in prefix):
                raise ValueError(f"builder proposed bad prefix {prefix}")
            edge = tuple(prefix) + (t,)
            base = tuple(labels[i - 1] for i in edge)
            counts = [0] * q
            for w in survivors:
                counts[chi(base + (w,)) - 1] += 1
            r = max(range(1, q + 1), key=lambda c: (counts[c - 1], -c))
            survivors = [w for w in survivors if chi(base + (w,)) == r]
            builder.observe(edge, r)
            stage.edges.append(ReductionEdge(edge[:-1], r, len(survivors)))
            length, _ = tracker.add(edge, r)
            if length >= n:
                win = (edge[1:], r)
                break
        if win:
            aux_path = tracker.extract(*win)
            aux_path = MonotonePath(aux_path.vertices[-n:], aux_path.color)
            assert tracker.verify(aux_path)
            real = tuple(labels[i - 1] for i in aux_path.vertices)
            for i in range(len(real) - k + 1):
                if chi(real[i : i + k]) != aux_path.color:
                    raise AssertionError("auxiliary path did not lift to the oracle")
            return MonotonePath(real, aux_path.color), tr
    raise PathNotFound("ran out of vertices before a path appeared")
