"""Generators for the explicit lower-bound colorings.

Every generator self-checks its output against the exact path/walk DP at
construction time (a hard postcondition, not just a test).  The stepping-up
constructions lift a small seed coloring on m vertices to one on 2^m vertices
through delta(a, b) = the most significant bit where a-1 and b-1 differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from monopath.coloring import (
    GraphColoring,
    OrderedColoring,
    OrderedGraph,
    colex_tuples,
    longest_mono_paths,
    longest_mono_paths_graph,
)
from monopath.digraphs import (
    DigraphColoring,
    lift_digraph_to_graph,
    longest_mono_walks,
    lowf_witness,
    walkfree_witness,
)

MATERIALIZE_MAX = 1024  # largest 2^m for which the full colex table is built


class SeedPreconditionError(ValueError):
    """The seed coloring fails its walk- or path-freeness precondition."""


@dataclass(frozen=True)
class StepUpParams:
    """Bit-level bookkeeping for one stepping-up lift."""

    q: int
    source_size: int
    target_size: int

    def __post_init__(self):
        if self.target_size != 2**self.source_size:
            raise ValueError("target_size must be 2**source_size")

    @property
    def width(self) -> int:
        return self.source_size

    def delta(self, a: int, b: int) -> int:
        """Largest bit position where a-1 and b-1 differ (a != b, 1-based ids)."""
        x = (a - 1) ^ (b - 1)
        if x == 0:
            raise ValueError("delta requires distinct vertices")
        d = x.bit_length() - 1
        assert d < self.width
        return d


def _delta_matrix(width: int) -> np.ndarray:
    """delta for all 0-based pairs of [0, 2^width): highest differing bit."""
    n = 2**width
    ids = np.arange(n, dtype=np.int64)
    x = ids[:, None] ^ ids[None, :]
    d = np.zeros((n, n), dtype=np.uint8)
    for bit in range(width):
        d[x >= (1 << bit)] = bit
    return d


def grid_witness_k2(q: int, n: int) -> OrderedColoring:
    """The extremal k=2 coloring on (n-1)^q vertices with no monochromatic
    monotone path of n vertices.

    Vertices are the points of [n-1]^q in lexicographic order; the edge (u, v)
    is colored by the first coordinate where the two points differ.  Under lex
    order that coordinate strictly increases along every color-i edge, so each
    color's paths stop at n-1 vertices.  The concrete rule is one valid choice;
    the DP check below is what certifies it.
    """
    if q < 1 or n < 2:
        raise ValueError("need q >= 1, n >= 2")
    side = n - 1
    n_pts = side**q

    def vec(idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(q):
            out.append(idx % side)
            idx //= side
        return tuple(reversed(out))  # first coordinate most significant

    vecs = [vec(i) for i in range(n_pts)]
    cols = np.zeros(math.comb(n_pts, 2), dtype=np.int32)
    for r, (u, v) in enumerate(colex_tuples(n_pts, 2)):
        vu, vv = vecs[u - 1], vecs[v - 1]
        for i in range(q):
            if vu[i] != vv[i]:
                cols[r] = i + 1
                break
    out = OrderedColoring(2, q, n_pts, cols)
    _, summary = longest_mono_paths(out)
    assert all(summary[c][0] <= n - 1 for c in summary)
    return out


@dataclass(eq=False)
class StepUp3Coloring:
    """Lazy 3-uniform stepping-up coloring on 2^m vertices; the full colex
    table would not fit in memory for m >= 11."""

    phi: DigraphColoring
    n_vertices: int
    params: StepUpParams

    k = 3

    @property
    def q(self) -> int:
        return self.phi.q

    def color_of(self, triple) -> int:
        a, b, c = triple
        d1 = self.params.delta(a, b)
        d2 = self.params.delta(b, c)
        assert d1 != d2
        return self.phi.color(d1 + 1, d2 + 1)

    def materialize(self) -> OrderedColoring:
        if self.n_vertices > MATERIALIZE_MAX:
            raise ValueError(f"refusing to materialize {self.n_vertices} vertices")
        width = self.params.width
        dmat = _delta_matrix(width)
        phi_table = _phi_table(self.phi)
        n = self.n_vertices
        cols = np.zeros(math.comb(n, 3), dtype=np.int32)
        # per (b, c): the a-block of edges (a, b, c) is a contiguous colex range
        for c in range(3, n + 1):
            cbase = math.comb(c - 1, 3)
            for b in range(2, c):
                base = cbase + math.comb(b - 1, 2)
                d1 = dmat[: b - 1, b - 1]
                cols[base : base + b - 1] = phi_table[d1, dmat[b - 1, c - 1]]
        return OrderedColoring(3, self.q, n, cols)


def _phi_table(phi: DigraphColoring) -> np.ndarray:
    m = phi.n_vertices
    t = np.zeros((m, m), dtype=np.int32)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a != b:
                t[a - 1, b - 1] = phi.color(a, b)
    return t


def stepup3_path_maxima(su: StepUp3Coloring) -> dict[int, int]:
    """Exact per-color longest monotone path in a stepping-up 3-coloring.

    Equivalent to the generic DP but exploits the bit structure: for a fixed
    pair (a, b) the color of (a, b, c) depends only on (delta(a,b), delta(b,c)),
    so predecessors aggregate per delta value, giving O(4^m * m * q) instead of
    O(8^m).  Cross-validated against longest_mono_paths at materializable sizes.
    """
    width = su.params.width
    n = su.n_vertices
    q = su.q
    dmat = _delta_matrix(width)
    phi_table = _phi_table(su.phi)
    # g[b, d, col-1] = max path length ending with a pair (a, b), delta(a,b)=d
    g = np.zeros((n, width, q), dtype=np.int32)
    best = [2] * q if n >= 2 else [min(n, 2)] * q
    for c in range(1, n):  # 0-based new last vertex
        bs = np.arange(c)
        d2 = dmat[bs, c].astype(np.intp)
        lenvec = np.full((c, q), 2, dtype=np.int32)
        for d in range(width):
            has_bit = (bs >> d) & 1 == 1
            for col in range(1, q + 1):
                mask = has_bit & (phi_table[d, d2] == col)
                cand = np.where(mask, g[bs, d, col - 1] + 1, 2)
                np.maximum(lenvec[:, col - 1], cand, out=lenvec[:, col - 1])
        for col in range(q):
            np.maximum.at(g[c, :, col], d2, lenvec[:, col])
            best[col] = max(best[col], int(lenvec[:, col].max()))
    return {col + 1: best[col] for col in range(q)}


def stepup3_witness(
    phi: DigraphColoring, q: int, n: int, materialize: bool | None = None
) -> OrderedColoring | StepUp3Coloring:
    """Lift a walk-free digraph coloring to a 3-uniform coloring on 2^m
    vertices with no monochromatic monotone path of n vertices.

    chi(a, b, c) = phi(delta(a, b), delta(b, c)); a monochromatic path of n
    vertices would project to a monochromatic walk of n-1 vertices in phi.
    The seed must therefore avoid walks of n-1 vertices, which is checked
    before lifting, and the output is checked by the path DP.
    """
    if q != phi.q:
        raise ValueError("q must match the seed coloring")
    walks = longest_mono_walks(phi)
    for c in range(1, q + 1):
        if walks.length(c) >= n - 1:
            raise SeedPreconditionError(
                f"seed has a color-{c} walk of {walks.length(c)} >= {n - 1} vertices"
            )
    params = StepUpParams(q, phi.n_vertices, 2**phi.n_vertices)
    su = StepUp3Coloring(phi, params.target_size, params)
    if materialize is None:
        materialize = params.target_size <= MATERIALIZE_MAX
    maxima = stepup3_path_maxima(su)
    assert all(v <= n - 1 for v in maxima.values()), maxima
    if not materialize:
        return su
    out = su.materialize()
    _, summary = longest_mono_paths(out)
    assert all(summary[c][0] <= n - 1 for c in summary)
    return out


def stepup_k_witness(psi: OrderedColoring, n: int) -> OrderedColoring:
    """Lift a (k-1)-uniform path-free coloring to a k-uniform coloring on
    2^(psi.N) vertices with no monochromatic monotone path of n+3 vertices.

    For a k-tuple with monotone delta sequence, the color is psi on the delta
    set.  Otherwise the first local extremum i1 decides: color 1 when i1 is
    even and a maximum or odd and a minimum, else color 2 (the rule uses only
    colors 1 and 2 regardless of q).
    """
    if psi.k < 3:
        raise ValueError("seed uniformity must be >= 3")
    if psi.q < 2:
        raise ValueError("need q >= 2")
    _, summary = longest_mono_paths(psi)
    for c, (length, _) in summary.items():
        if length >= n:
            raise SeedPreconditionError(
                f"seed has a color-{c} monotone path of {length} >= {n} vertices"
            )
    k = psi.k + 1
    params = StepUpParams(psi.q, psi.n_vertices, 2**psi.n_vertices)
    big_n = params.target_size
    cols = np.zeros(math.comb(big_n, k), dtype=np.int32)
    for r, edge in enumerate(colex_tuples(big_n, k)):
        deltas = [params.delta(edge[i], edge[i + 1]) for i in range(k - 1)]
        for i in range(k - 2):
            assert deltas[i] != deltas[i + 1]
        if all(deltas[i] < deltas[i + 1] for i in range(k - 2)) or all(
            deltas[i] > deltas[i + 1] for i in range(k - 2)
        ):
            cols[r] = psi.color_of(tuple(sorted(d + 1 for d in deltas)))
        else:
            i1 = next(
                i
                for i in range(2, k - 1)
                if (deltas[i - 2] < deltas[i - 1] > deltas[i])
                or (deltas[i - 2] > deltas[i - 1] < deltas[i])
            )
            is_max = deltas[i1 - 2] < deltas[i1 - 1] > deltas[i1]
            cols[r] = 1 if (i1 % 2 == 0) == is_max else 2
    out = OrderedColoring(k, psi.q, big_n, cols)
    _, summary = longest_mono_paths(out)
    assert all(summary[c][0] <= n + 2 for c in summary), summary
    return out


def nonmonotone_stepup_color(deltas: list[int]) -> int:
    """The color-1/2 rule for a nonmonotone delta sequence, exposed for tests."""
    k1 = len(deltas)
    i1 = next(
        i
        for i in range(2, k1)
        if (deltas[i - 2] < deltas[i - 1] > deltas[i])
        or (deltas[i - 2] > deltas[i - 1] < deltas[i])
    )
    is_max = deltas[i1 - 2] < deltas[i1 - 1] > deltas[i1]
    return 1 if (i1 % 2 == 0) == is_max else 2


# --- the size-Ramsey adversary coloring ---


def t_core(g: OrderedGraph, t: int) -> tuple[list[int], list[int]]:
    """(deletion order, core vertices): repeatedly delete a minimum-degree
    vertex while its degree is < t; ties broken by smallest vertex id."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n_vertices + 1)}
    for (u, v) in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(adj)
    deletion: list[int] = []
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        if len(adj[v]) >= t:
            break
        deletion.append(v)
        alive.remove(v)
        for w in adj[v]:
            adj[w].discard(v)
        adj[v].clear()
    return deletion, sorted(alive)


def degeneracy_coloring(g: OrderedGraph, deletion: list[int]) -> dict[int, int]:
    """Greedy proper coloring in reverse deletion order, smallest free color.
    Each vertex sees < t already-colored neighbors when the order comes from
    a t-core peel, so at most t colors are used."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n_vertices + 1)}
    for (u, v) in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    color: dict[int, int] = {}
    for v in reversed(deletion):
        used = {color[w] for w in adj[v] if w in color}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def sparse_adversary_coloring(
    g: OrderedGraph,
    q: int,
    n1: int,
    n2: int,
    seed: DigraphColoring | None = None,
) -> GraphColoring:
    """Color a sparse ordered graph with no monochromatic monotone path of
    n1+n2-1 vertices, when the graph is small enough for the split to work.

    V2 is the t-core with t = the seed digraph's vertex count (an exact
    walk-free witness on f(q, n1) - 1 vertices by default); it gets the k=2
    extremal coloring for (q, n2) and so must have fewer than N_2(q, n2)
    vertices.  V1 is (t-1)-degenerate and is lifted through the seed digraph.
    Cross edges (i in V1, j in V2) get color 1 when i < j and color 2 when
    i > j, so no monochromatic path crosses between the parts twice.
    """
    if seed is None:
        seed = _default_adversary_seed(q, n1)
    walks = longest_mono_walks(seed)
    for c in range(1, q + 1):
        if walks.length(c) >= n1:
            raise SeedPreconditionError("seed digraph is not walk-free at n1")
    t = seed.n_vertices
    deletion, core = t_core(g, t)
    n2_cap = (n2 - 1) ** q + 1
    if len(core) >= n2_cap:
        raise ValueError(
            f"edge budget exceeded: t-core has {len(core)} >= N_2({q},{n2}) = {n2_cap} vertices"
        )
    colors: dict[tuple[int, int], int] = {}
    core_set = set(core)
    core_index = {v: i + 1 for i, v in enumerate(core)}  # order inherited from g

    # V2: extremal coloring restricted to |V2| vertices
    if core:
        grid = grid_witness_k2(q, n2)
        assert grid.n_vertices >= len(core)
    for (u, v) in g.edges:
        if u in core_set and v in core_set:
            a, b = core_index[u], core_index[v]
            colors[(u, v)] = grid.color_of((min(a, b), max(a, b)))

    # V1: degeneracy proper coloring lifted through the seed digraph
    v1 = [v for v in range(1, g.n_vertices + 1) if v not in core_set]
    if v1:
        classes = degeneracy_coloring(g, deletion)
        sub = g.induced(v1)
        parts = [classes[v] for v in sorted(v1)]
        lifted = lift_digraph_to_graph(seed, sub, parts)
        relabel = {i + 1: v for i, v in enumerate(sorted(v1))}
        for (a, b), c in lifted.colors.items():
            colors[(relabel[a], relabel[b])] = c

    # cross edges
    for (u, v) in g.edges:
        if (u in core_set) != (v in core_set):
            i = u if u not in core_set else v  # the V1 endpoint
            j = v if u not in core_set else u
            colors[(u, v)] = 1 if i < j else 2

    out = GraphColoring(g, q, colors)
    maxima = longest_mono_paths_graph(out)
    assert all(maxima[c][0] <= n1 + n2 - 2 for c in maxima), maxima
    return out


def _default_adversary_seed(q: int, n1: int) -> DigraphColoring:
    """Walk-free seed on f(q, n1) - 1 vertices by exact search when tiny,
    falling back to a lowf grid witness."""
    from monopath.digraphs import f_exact, CapExceeded

    try:
        f = f_exact(q, n1, cap=8)
        seed = walkfree_witness(f - 1, q, n1)
        assert seed is not None
        return seed
    except CapExceeded:
        m = 1 + (n1 - 2) // (q - 1)
        return lowf_witness(q, m)
