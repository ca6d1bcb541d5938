"""Ordered k-uniform colorings and the longest monochromatic monotone path DP.

Vertices are 1-based ids 1..N.  An edge is a strictly increasing k-tuple of
vertex ids; edges are stored in a flat table indexed by colex rank.  A
monotone path of length n is a strictly increasing sequence of n vertices in
which every window of k consecutive vertices is an edge of one fixed color;
"length" always counts vertices, so any k-1 vertices form a (vacuous) path of
length k-1 in every color.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np


def colex_rank(subset: Iterable[int]) -> int:
    """Rank of a strictly increasing tuple among k-subsets in colex order."""
    rank = 0
    prev = 0
    i = 0
    for v in subset:
        i += 1
        if v <= prev:
            raise ValueError(f"subset must be strictly increasing, got {tuple(subset)!r}")
        rank += math.comb(v - 1, i)
        prev = v
    return rank


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of colex_rank for k-subsets."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    out = []
    r = rank
    for i in range(k, 0, -1):
        v = i
        while math.comb(v, i) <= r:
            v += 1
        out.append(v)
        r -= math.comb(v - 1, i)
    out.reverse()
    return tuple(out)


def colex_tuples(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing k-tuples of [n], in colex order."""
    if k == 0:
        yield ()
        return
    for last in range(k, n + 1):
        for prefix in colex_tuples(last - 1, k - 1):
            yield prefix + (last,)


def _color_dtype(q: int):
    return np.uint8 if q <= 255 else np.int32


@dataclass(eq=False)
class OrderedColoring:
    """A q-coloring of all k-subsets of [N], colex-indexed.

    colors[r] is the color (in 1..q) of the k-subset of colex rank r.
    Treated as immutable after construction.
    """

    k: int
    q: int
    n_vertices: int
    colors: np.ndarray

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("uniformity k must be >= 2")
        if self.q < 1:
            raise ValueError("color count q must be >= 1")
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be >= 0")
        expected = math.comb(self.n_vertices, self.k)
        self.colors = np.asarray(self.colors)
        if self.colors.shape != (expected,):
            raise ValueError(
                f"wrong count: expected {expected} colors, got {self.colors.shape}"
            )
        if expected and (self.colors.min() < 1 or self.colors.max() > self.q):
            raise ValueError("color out of range")
        self.colors = self.colors.astype(_color_dtype(self.q), copy=False)

    @property
    def n_edges(self) -> int:
        return len(self.colors)

    def color_of(self, subset: Iterable[int]) -> int:
        return int(self.colors[colex_rank(subset)])

    def restrict(self, m: int) -> "OrderedColoring":
        """Induced coloring on the vertex prefix [m] (a colex prefix slice)."""
        if not 0 <= m <= self.n_vertices:
            raise ValueError("restriction size out of range")
        return OrderedColoring(self.k, self.q, m, self.colors[: math.comb(m, self.k)].copy())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrderedColoring)
            and (self.k, self.q, self.n_vertices) == (other.k, other.q, other.n_vertices)
            and np.array_equal(self.colors, other.colors)
        )


@dataclass(frozen=True)
class MonotonePath:
    """A strictly increasing vertex sequence with a claimed edge color."""

    vertices: tuple[int, ...]
    color: int

    @property
    def length(self) -> int:
        return len(self.vertices)


def verify_path(coloring: OrderedColoring, path: MonotonePath) -> bool:
    """True iff the path is increasing, in range, and every k-window has its color."""
    vs = path.vertices
    if not 1 <= path.color <= coloring.q:
        return False
    prev = 0
    for v in vs:
        if not (prev < v <= coloring.n_vertices):
            return False
        prev = v
    k = coloring.k
    for i in range(len(vs) - k + 1):
        if coloring.color_of(vs[i : i + k]) != path.color:
            return False
    return True


@dataclass(eq=False)
class LengthTable:
    """Per (k-1)-tuple, per color: length of the longest monochromatic
    monotone path ending with that tuple.  Rows are indexed by the colex rank
    of the tuple; entries are always >= k-1.  Witnesses are reconstructed by
    walking the table backwards (deterministically: smallest predecessor)."""

    coloring: OrderedColoring
    lengths: np.ndarray  # shape (C(N, k-1), q)

    def length(self, tup: Iterable[int], color: int) -> int:
        return int(self.lengths[colex_rank(tup), color - 1])

    def max_length(self, color: int) -> int:
        c = self.coloring
        trivial = min(c.n_vertices, c.k - 1)
        if self.lengths.shape[0] == 0:
            return trivial
        return max(trivial, int(self.lengths[:, color - 1].max()))

    def witness(self, color: int) -> MonotonePath:
        c = self.coloring
        k = c.k
        target = self.max_length(color)
        if target <= k - 1:
            return MonotonePath(tuple(range(1, target + 1)), color)
        col = self.lengths[:, color - 1]
        end_rank = int(np.argmax(col == target))
        cur = colex_unrank(end_rank, k - 1)
        path = list(cur)
        cur_len = target
        colors = c.colors
        while cur_len > k - 1:
            blen = cur[0] - 1
            ebase = sum(math.comb(cur[j] - 1, j + 2) for j in range(k - 1))
            pbase = sum(math.comb(cur[j] - 1, j + 2) for j in range(k - 2))
            blk = colors[ebase : ebase + blen]
            pref = self.lengths[pbase : pbase + blen, color - 1]
            hits = np.flatnonzero((blk == color) & (pref == cur_len - 1))
            a = int(hits[0]) + 1  # first hit = smallest predecessor
            path.insert(0, a)
            cur = (a,) + cur[:-1]
            cur_len -= 1
        return MonotonePath(tuple(path), color)


def longest_mono_paths(
    coloring: OrderedColoring,
) -> tuple[LengthTable, dict[int, tuple[int, MonotonePath]]]:
    """Exact longest monochromatic monotone path lengths, for every color and
    every ending (k-1)-tuple.

    Edges are scanned in colex order (increasing last vertex), relaxing
    len[suffix] <- max(len[suffix], len[prefix] + 1); prefix rows are final
    before any edge ending past them is processed.  Returns the full table
    plus, per color, (max length, one witness path).
    """
    N, k, q = coloring.n_vertices, coloring.k, coloring.q
    m = math.comb(N, k - 1)
    lengths = np.full((m, q), k - 1, dtype=np.int32)
    colors = coloring.colors
    arange_cache = np.arange(N, dtype=np.intp)
    for r, tup in enumerate(colex_tuples(N, k - 1)):
        blen = tup[0] - 1
        if blen == 0:
            continue
        ebase = sum(math.comb(tup[j] - 1, j + 2) for j in range(k - 1))
        pbase = sum(math.comb(tup[j] - 1, j + 2) for j in range(k - 2))
        blk = colors[ebase : ebase + blen]
        gathered = lengths[pbase : pbase + blen][arange_cache[:blen], blk - 1] + 1
        np.maximum.at(lengths[r], blk - 1, gathered)
    table = LengthTable(coloring, lengths)
    summary = {c: (table.max_length(c), table.witness(c)) for c in range(1, q + 1)}
    return table, summary


def enumerate_all_paths(coloring: OrderedColoring) -> dict[int, int]:
    """Brute-force oracle: max monotone path length per color by full DFS
    enumeration.  Exponential; for cross-checking the DP at tiny sizes only."""
    N, k = coloring.n_vertices, coloring.k
    best = {c: min(N, k - 1) for c in range(1, coloring.q + 1)}

    def extend(seq: tuple[int, ...], color: int | None):
        for v in range(seq[-1] + 1 if seq else 1, N + 1):
            nxt = seq + (v,)
            if len(nxt) >= k:
                ecol = coloring.color_of(nxt[-k:])
                if color is not None and ecol != color:
                    continue
                if len(nxt) > best[ecol]:
                    best[ecol] = len(nxt)
                extend(nxt, ecol)
            else:
                extend(nxt, None)

    extend((), None)
    return best


# --- sparse ordered graphs (k = 2), used by the lifting and adversary builds ---


@dataclass(eq=False)
class OrderedGraph:
    """An ordered graph on [N]: a set of 2-subsets, not necessarily complete."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (u, v) in self.edges:
            if not (1 <= u < v <= self.n_vertices):
                raise ValueError(f"bad edge {(u, v)}")
        self.edges = frozenset(self.edges)

    @staticmethod
    def path(n: int) -> "OrderedGraph":
        return OrderedGraph(n, frozenset((i, i + 1) for i in range(1, n)))

    @staticmethod
    def complete(n: int) -> "OrderedGraph":
        return OrderedGraph(n, frozenset((u, v) for v in range(2, n + 1) for u in range(1, v)))

    @staticmethod
    def complete_bipartite(a: int, b: int) -> "OrderedGraph":
        left = range(1, a + 1)
        right = range(a + 1, a + b + 1)
        return OrderedGraph(a + b, frozenset((u, v) for u in left for v in right))

    def induced(self, vertices: list[int]) -> "OrderedGraph":
        """Induced subgraph on the given vertices, relabeled 1..len in order."""
        idx = {v: i + 1 for i, v in enumerate(sorted(vertices))}
        keep = frozenset(
            (idx[u], idx[v]) for (u, v) in self.edges if u in idx and v in idx
        )
        return OrderedGraph(len(vertices), keep)


@dataclass(eq=False)
class GraphColoring:
    """An edge coloring of an OrderedGraph with colors in 1..q."""

    graph: OrderedGraph
    q: int
    colors: dict[tuple[int, int], int]

    def __post_init__(self):
        if set(self.colors) != set(self.graph.edges):
            raise ValueError("colors must cover exactly the graph's edges")
        for c in self.colors.values():
            if not 1 <= c <= self.q:
                raise ValueError("color out of range")


def longest_mono_paths_graph(gc: GraphColoring) -> dict[int, tuple[int, MonotonePath]]:
    """Longest monochromatic monotone path per color in a sparse ordered graph."""
    N = gc.graph.n_vertices
    adj_in: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, N + 1)}
    for (u, v), c in gc.colors.items():
        adj_in[v].append((u, c))
    lens = {(v, c): 1 for v in range(1, N + 1) for c in range(1, gc.q + 1)}
    back: dict[tuple[int, int], int] = {}
    for v in range(1, N + 1):
        for (u, c) in sorted(adj_in[v]):
            cand = lens[(u, c)] + 1
            if cand > lens[(v, c)]:
                lens[(v, c)] = cand
                back[(v, c)] = u
    out = {}
    for c in range(1, gc.q + 1):
        best_v = max(range(1, N + 1), key=lambda v: (lens[(v, c)], -v), default=0)
        if N == 0:
            out[c] = (0, MonotonePath((), c))
            continue
        L = lens[(best_v, c)]
        path = [best_v]
        v = best_v
        while (v, c) in back and len(path) < L:
            v = back[(v, c)]
            path.insert(0, v)
        out[c] = (L, MonotonePath(tuple(path), c))
    return out


# --- text format: "k q N" header, then C(N,k) colors in colex order ---


def write_coloring(coloring: OrderedColoring, stream: IO[str], comment: str | None = None) -> None:
    """Write the canonical text form; an optional '#' comment line follows the header."""
    stream.write(f"{coloring.k} {coloring.q} {coloring.n_vertices}\n")
    if comment:
        stream.write(f"# {comment}\n")
    vals = coloring.colors
    for i in range(0, len(vals), 30):
        stream.write(" ".join(str(int(v)) for v in vals[i : i + 30]) + "\n")


def read_coloring(stream: IO[str]) -> OrderedColoring:
    """Parse the coloring text format; '#' starts a comment anywhere on a line."""
    tokens: list[str] = []
    for line in stream:
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if len(tokens) < 3:
        raise ValueError("malformed header: expected 'k q N'")
    try:
        k, q, n = int(tokens[0]), int(tokens[1]), int(tokens[2])
    except ValueError as exc:
        raise ValueError("malformed header: expected integers 'k q N'") from exc
    expected = math.comb(n, k) if n >= k else 0
    body = tokens[3:]
    if len(body) != expected:
        raise ValueError(f"wrong count: expected {expected} colors, got {len(body)}")
    colors = np.array([int(t) for t in body], dtype=np.int64)
    return OrderedColoring(k, q, n, colors)
