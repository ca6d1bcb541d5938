"""Complete-digraph colorings, longest monochromatic walks, and the function f.

f(q, n) is the least N such that every q-coloring of the complete digraph D_N
has a monochromatic walk of n vertices (repetition allowed).  A color class
with a closed walk has unbounded walks; otherwise it is acyclic and the
longest walk is a longest path, computed by a DAG DP.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Sequence

import numpy as np

from monopath.coloring import GraphColoring, OrderedGraph

UNBOUNDED = math.inf


class CapExceeded(Exception):
    """Raised when an exact search runs past its size cap."""


@dataclass(eq=False)
class DigraphColoring:
    """A q-coloring of the ordered pairs of [N], row-major by (a, b), b != a."""

    q: int
    n_vertices: int
    colors: np.ndarray  # length N(N-1)

    def __post_init__(self):
        expected = self.n_vertices * (self.n_vertices - 1)
        self.colors = np.asarray(self.colors, dtype=np.int32)
        if self.colors.shape != (expected,):
            raise ValueError(f"wrong count: expected {expected} colors")
        if expected and (self.colors.min() < 1 or self.colors.max() > self.q):
            raise ValueError("color out of range")

    def _index(self, a: int, b: int) -> int:
        if a == b or not (1 <= a <= self.n_vertices and 1 <= b <= self.n_vertices):
            raise ValueError(f"bad pair {(a, b)}")
        return (a - 1) * (self.n_vertices - 1) + (b - 1 if b < a else b - 2)

    def color(self, a: int, b: int) -> int:
        return int(self.colors[self._index(a, b)])

    @staticmethod
    def from_function(q: int, n: int, fn) -> "DigraphColoring":
        vals = [fn(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if b != a]
        return DigraphColoring(q, n, np.array(vals, dtype=np.int32))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DigraphColoring)
            and (self.q, self.n_vertices) == (other.q, other.n_vertices)
            and np.array_equal(self.colors, other.colors)
        )


@dataclass(frozen=True)
class WalkLengths:
    """Per color: exact longest walk length (vertex count), or UNBOUNDED when
    the color class has a closed walk."""

    per_color: tuple[float, ...]

    def length(self, color: int) -> float:
        return self.per_color[color - 1]

    def is_unbounded(self, color: int) -> bool:
        return self.per_color[color - 1] == UNBOUNDED

    @property
    def max_finite(self) -> int:
        vals = [int(v) for v in self.per_color if v != UNBOUNDED]
        return max(vals, default=0)


def _color_walk_length(n_vertices: int, edges: list[tuple[int, int]]) -> float:
    """Longest walk in one color class: UNBOUNDED on a cycle, else DAG longest path."""
    if n_vertices == 0:
        return 0
    indeg = [0] * (n_vertices + 1)
    adj_out: list[list[int]] = [[] for _ in range(n_vertices + 1)]
    for a, b in edges:
        adj_out[a].append(b)
        indeg[b] += 1
    order = [v for v in range(1, n_vertices + 1) if indeg[v] == 0]
    dist = [1] * (n_vertices + 1)
    seen = 0
    queue = list(order)
    while queue:
        v = queue.pop()
        seen += 1
        for w in adj_out[v]:
            if dist[v] + 1 > dist[w]:
                dist[w] = dist[v] + 1
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen < n_vertices:
        return UNBOUNDED
    return max(dist[1:])


def longest_mono_walks(d: DigraphColoring) -> WalkLengths:
    """Exact per-color longest walk lengths in a colored complete digraph."""
    by_color: dict[int, list[tuple[int, int]]] = {c: [] for c in range(1, d.q + 1)}
    n = d.n_vertices
    idx = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if b == a:
                continue
            by_color[int(d.colors[idx])].append((a, b))
            idx += 1
    return WalkLengths(
        tuple(_color_walk_length(n, by_color[c]) for c in range(1, d.q + 1))
    )


def walk_length_oracle(d: DigraphColoring, color: int, cap: int) -> float:
    """Independent oracle: boolean adjacency powers.  A walk of N+1 vertices
    forces a repeat, hence a closed walk; otherwise returns the exact max."""
    n = d.n_vertices
    adj = np.zeros((n, n), dtype=bool)
    idx = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if b == a:
                continue
            if int(d.colors[idx]) == color:
                adj[a - 1, b - 1] = True
            idx += 1
    if n == 0:
        return 0
    best = 1
    reach = np.eye(n, dtype=bool)
    for length in range(2, max(cap, n + 1) + 1):
        reach = (reach.astype(np.int64) @ adj.astype(np.int64)) > 0
        if reach.any():
            best = length
            if length > n:
                return UNBOUNDED
        else:
            break
    return best


def lowf_witness(q: int, n: int) -> DigraphColoring:
    """The grid coloring on [n]^(q-1) showing f(q, 2+(q-1)(n-1)) > n^(q-1).

    Vertices are the points of [n]^(q-1), enumerated in colex order on
    coordinate vectors.  Edge (a, b) gets the smallest coordinate i with
    a_i < b_i, or color q when no coordinate increases.  Colors 1..q-1 then
    have walks of at most n vertices (coordinate i strictly increases) and
    color q of at most 1+(q-1)(n-1) (the coordinate sum strictly decreases).
    """
    if q < 2 or n < 1:
        raise ValueError("need q >= 2, n >= 1")
    dim = q - 1
    n_pts = n**dim

    def vec(idx: int) -> tuple[int, ...]:
        # colex: coordinate 1 varies fastest
        out = []
        for _ in range(dim):
            out.append(idx % n + 1)
            idx //= n
        return tuple(out)

    vecs = [vec(i) for i in range(n_pts)]

    def color(a: int, b: int) -> int:
        va, vb = vecs[a - 1], vecs[b - 1]
        for i in range(dim):
            if va[i] < vb[i]:
                return i + 1
        return q

    d = DigraphColoring.from_function(q, n_pts, color)
    walks = longest_mono_walks(d)
    for c in range(1, q):
        assert walks.length(c) <= n
    assert walks.length(q) <= 1 + (q - 1) * (n - 1)
    return d


def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if b != a]


def walkfree_witness(n_vertices: int, q: int, n: int) -> DigraphColoring | None:
    """Backtracking search for a q-coloring of D_N with no monochromatic walk
    of n vertices; None when none exists.  Pairs are assigned row-major with
    full per-color walk recomputation as the pruning check (N stays tiny)."""
    if n < 2:
        return None if n_vertices >= n else DigraphColoring(
            q, n_vertices, np.ones(n_vertices * (n_vertices - 1), dtype=np.int32)
        )
    pairs = _pair_order(n_vertices)
    by_color: dict[int, list[tuple[int, int]]] = {c: [] for c in range(1, q + 1)}
    assignment: list[int] = []

    def ok(color: int) -> bool:
        length = _color_walk_length(n_vertices, by_color[color])
        return length != UNBOUNDED and length < n

    def rec(i: int) -> bool:
        if i == len(pairs):
            return True
        trial = range(1, 2) if i == 0 and q > 1 else range(1, q + 1)
        for c in trial:
            by_color[c].append(pairs[i])
            if ok(c):
                assignment.append(c)
                if rec(i + 1):
                    return True
                assignment.pop()
            by_color[c].pop()
        return False

    if not rec(0):
        return None
    return DigraphColoring(q, n_vertices, np.array(assignment, dtype=np.int32))


def f_exact(q: int, n: int, cap: int = 40) -> int:
    """The least N such that every q-coloring of D_N has a monochromatic walk
    of n vertices, by exhaustive search for N = 1, 2, ..., cap."""
    if q < 1 or n < 1:
        raise ValueError("need q >= 1, n >= 1")
    if n == 1:
        return 1
    for n_vertices in range(1, cap + 1):
        if walkfree_witness(n_vertices, q, n) is None:
            return n_vertices
    raise CapExceeded(f"f({q},{n}) exceeds cap {cap}")


def lift_digraph_to_graph(
    d: DigraphColoring, g: OrderedGraph, parts: Sequence[int]
) -> GraphColoring:
    """Color the edges of g through a proper vertex coloring and d.

    Vertex v in class i, w in class j (v < w) gives edge color d(i, j).  Any
    monochromatic monotone path in the result projects to a monochromatic
    walk of the same length in d, so walk-freeness lifts to path-freeness.
    """
    if len(parts) != g.n_vertices:
        raise ValueError("parts must assign a class to every vertex")
    for p in parts:
        if not 1 <= p <= d.n_vertices:
            raise ValueError("class id out of range for the digraph")
    colors = {}
    for (v, w) in g.edges:
        i, j = parts[v - 1], parts[w - 1]
        if i == j:
            raise ValueError(f"parts is not proper: edge {(v, w)} inside class {i}")
        colors[(v, w)] = d.color(i, j)
    return GraphColoring(g, d.q, colors)


# --- text format: "q N" header, then N(N-1) colors row-major ---


def write_digraph(d: DigraphColoring, stream: IO[str], comment: str | None = None) -> None:
    stream.write(f"{d.q} {d.n_vertices}\n")
    if comment:
        stream.write(f"# {comment}\n")
    vals = d.colors
    for i in range(0, len(vals), 30):
        stream.write(" ".join(str(int(v)) for v in vals[i : i + 30]) + "\n")


def read_digraph(stream: IO[str]) -> DigraphColoring:
    tokens: list[str] = []
    for line in stream:
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if len(tokens) < 2:
        raise ValueError("malformed header: expected 'q N'")
    q, n = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != n * (n - 1):
        raise ValueError(f"wrong count: expected {n * (n - 1)} colors, got {len(body)}")
    return DigraphColoring(q, n, np.array([int(t) for t in body], dtype=np.int32))
