"""The lattice game, the online Ramsey game, and their equivalence adapters.

In the lattice game, builder and coordinator grow a sequence of points in
Z^q_{>0}.  Each step of a stage, builder picks an earlier point p_j and
coordinator answers a coordinate k; the stage's new point must exceed p_j in
coordinate k.  Builder wins when a sequence point has a coordinate >= n.

In the online Ramsey game (uniformity kappa), stage t adds vertex v_t,
builder draws edges whose largest vertex is v_t, and painter colors each
immediately; builder wins when a monochromatic monotone path of n vertices
exists among the drawn edges.  Coordinate answers correspond to colors and
point coordinates to per-color longest path lengths ending at a vertex,
which makes the two games step-for-step equivalent for kappa = 2.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from monopath.coloring import MonotonePath


class NonConformingMove(Exception):
    """A strategy made an illegal move; the offender is named in the message."""


@dataclass(frozen=True)
class GridPoint:
    """A point of Z^q with positive coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords or any(x < 1 for x in self.coords):
            raise ValueError("coordinates must be positive")

    def coord(self, k: int) -> int:
        """1-based coordinate access."""
        return self.coords[k - 1]

    @property
    def level(self) -> int:
        return sum(self.coords)

    def dominated_by(self, other: "GridPoint") -> bool:
        """self < other in the coordinatewise partial order (strict)."""
        return self != other and all(a <= b for a, b in zip(self.coords, other.coords))


def position(p: GridPoint, points: Sequence[GridPoint]) -> int:
    """min over coordinates k of |{s : p_k >= s_k}| (the position of p w.r.t. S)."""
    if not points:
        raise ValueError("position w.r.t. an empty set is undefined")
    q = len(p.coords)
    return min(
        sum(1 for s in points if p.coords[k] >= s.coords[k]) for k in range(q)
    )


def a_bound(q: int, n: int) -> float:
    """Per-stage step bound for the winning builder strategy."""
    return 1 + (q - 1) * math.log(n) / math.log(q / (q - 1))


def b_bound(q: int, n: int) -> int:
    """Exact stage count of the winning builder strategy."""
    return (n - 1) ** q + 1


# --- transcripts ---


@dataclass(frozen=True)
class LatticeStage:
    steps: tuple[tuple[int, int], ...]  # (picked sequence index, 1-based; coordinate)
    point: GridPoint
    is_new: bool  # False marks a wasted stage (point already in the sequence)


@dataclass
class LatticeTranscript:
    q: int
    n: int
    stages: list[LatticeStage] = field(default_factory=list)

    @property
    def total_steps(self) -> int:
        return sum(len(s.steps) for s in self.stages)

    @property
    def n_stages(self) -> int:
        return len(self.stages)


def validate_lattice_transcript(tr: LatticeTranscript) -> bool:
    """Replay the constraint and win conditions of a recorded lattice play."""
    seq: list[GridPoint] = []
    for si, stage in enumerate(tr.stages):
        if si == 0 and stage.steps:
            return False
        for (j, k) in stage.steps:
            if not (1 <= j <= len(seq) and 1 <= k <= tr.q):
                return False
            if stage.point.coord(k) <= seq[j - 1].coord(k):
                return False
        if stage.is_new != (stage.point not in seq):
            return False
        seq.append(stage.point)
    return bool(seq) and any(x >= tr.n for x in seq[-1].coords)


@dataclass(frozen=True)
class DrawnEdge:
    edge: tuple[int, ...]  # vertex indices, increasing; last = the stage's vertex
    color: int


@dataclass(frozen=True)
class OnlineStage:
    t: int
    edges: tuple[DrawnEdge, ...]


@dataclass
class GameTranscript:
    k: int
    q: int
    n: int
    stages: list[OnlineStage] = field(default_factory=list)

    @property
    def total_edges(self) -> int:
        return sum(len(s.edges) for s in self.stages)


# --- the lattice game engine ---


def play_lattice(
    builder, coordinator, q: int, n: int, max_stages: int | None = None
) -> LatticeTranscript:
    """Run one lattice game to completion; every move is validated."""
    seq: list[GridPoint] = []
    tr = LatticeTranscript(q, n)
    while True:
        builder.start_stage(tuple(seq))
        coordinator.start_stage(tuple(seq))
        constraints: list[tuple[int, int]] = []
        if seq:  # stage 1 takes no steps
            while True:
                j = builder.pick(tuple(seq))
                if j is None:
                    break
                if not 1 <= j <= len(seq):
                    raise NonConformingMove(f"builder picked bad index {j}")
                k = coordinator.answer(tuple(seq), j)
                if not 1 <= k <= q:
                    raise NonConformingMove(f"coordinator answered bad coordinate {k}")
                builder.observe(k)
                constraints.append((j, k))
        p = coordinator.choose_point(tuple(seq), tuple(constraints))
        for (j, k) in constraints:
            if p.coord(k) <= seq[j - 1].coord(k):
                raise NonConformingMove(
                    f"coordinator point {p} violates constraint x_{k} > {seq[j - 1].coord(k)}"
                )
        tr.stages.append(LatticeStage(tuple(constraints), p, p not in seq))
        seq.append(p)
        if any(x >= n for x in p.coords):
            return tr
        if max_stages is not None and len(seq) >= max_stages:
            raise RuntimeError(f"no win within {max_stages} stages")


# --- builder strategy (wins in exactly (n-1)^q + 1 stages) ---


def _maximal_indices(seq: Sequence[GridPoint]) -> list[int]:
    out = []
    seen: set[tuple[int, ...]] = set()
    for i, p in enumerate(seq):
        if p.coords in seen:
            continue
        seen.add(p.coords)
        if not any(p.dominated_by(o) for o in seq):
            out.append(i + 1)
    return out


class MaximalElementsBuilder:
    """Repeatedly beat the maximal elements of the sequence: pick a candidate
    of maximal position (>= |M|/q exists), drop the candidates not forced up
    by the answer, end the stage when none remain.  The new point then differs
    from every earlier point, so stages never repeat a point."""

    def __init__(self, q: int, n: int):
        self.q = q
        self.n = n
        self._m: list[int] = []
        self._seq: tuple[GridPoint, ...] = ()
        self._picked: GridPoint | None = None

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        self._seq = seq
        self._m = _maximal_indices(seq)

    def pick(self, seq: tuple[GridPoint, ...]) -> int | None:
        if not self._m:
            return None
        pts = [self._seq[j - 1] for j in self._m]
        best = max(self._m, key=lambda j: (position(self._seq[j - 1], pts), -j))
        self._picked = self._seq[best - 1]
        return best

    def observe(self, k: int) -> None:
        picked = self._picked
        self._m = [
            j for j in self._m if self._seq[j - 1].coord(k) > picked.coord(k)
        ]


# --- coordinator strategies ---


def _grid_points(q: int, n: int) -> list[GridPoint]:
    return [GridPoint(c) for c in itertools.product(range(1, n), repeat=q)]


def _minimal_conforming(
    q: int, seq: Sequence[GridPoint], constraints: Iterable[tuple[int, int]]
) -> GridPoint:
    coords = [1] * q
    for (j, k) in constraints:
        coords[k - 1] = max(coords[k - 1], seq[j - 1].coord(k) + 1)
    return GridPoint(tuple(coords))


class LevelFillingCoordinator:
    """Fill the grid [n-1]^q level by level (coordinate sum), keeping at least
    a 1/q fraction of the unfilled level alive per step.  When builder stops a
    stage with two survivors, play their coordinatewise minimum, a point of a
    lower level that is already in the sequence (a wasted stage)."""

    def __init__(self, q: int, n: int):
        self.q = q
        self.n = n
        self._levels: dict[int, list[GridPoint]] = defaultdict(list)
        for p in _grid_points(q, n):
            self._levels[p.level].append(p)
        self._s: list[GridPoint] = []
        self._exhausted = False

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        filled = set(seq)
        for r in sorted(self._levels):
            unfilled = [p for p in self._levels[r] if p not in filled]
            if unfilled:
                self._s = sorted(unfilled, key=lambda p: p.coords)
                self._exhausted = False
                return
        self._s = []
        self._exhausted = True

    def answer(self, seq: tuple[GridPoint, ...], j: int) -> int:
        if self._exhausted or not self._s:
            return 1
        p = seq[j - 1]
        target = (len(self._s) + self.q - 1) // self.q  # ceil(|S|/q)
        best_k, best = 1, -1
        for k in range(1, self.q + 1):
            survivors = [s for s in self._s if s.coord(k) > p.coord(k)]
            if len(survivors) >= target:
                self._s = survivors
                return k
            if len(survivors) > best:
                best_k, best = k, len(survivors)
        # unreachable against conforming play; keep the largest set anyway
        self._s = [s for s in self._s if s.coord(best_k) > p.coord(best_k)]
        return best_k

    def choose_point(
        self, seq: tuple[GridPoint, ...], constraints: tuple[tuple[int, int], ...]
    ) -> GridPoint:
        if self._exhausted or not self._s:
            return _minimal_conforming(self.q, seq, constraints)
        if len(self._s) == 1:
            return self._s[0]
        x, y = self._s[0], self._s[1]
        return GridPoint(tuple(min(a, b) for a, b in zip(x.coords, y.coords)))


class ExtensionCoordinator:
    """The stage-lower-bound adversary: commit to a linear extension of the
    grid poset and produce its points in order.  Each earlier point fails to
    dominate the target, so a conforming coordinate always exists; the game
    therefore lasts the full (n-1)^q + 1 stages against any builder that
    forces new points."""

    def __init__(self, q: int, n: int, rng: random.Random | None = None):
        self.q = q
        self.n = n
        pts = _grid_points(q, n)
        if rng is not None:
            rng.shuffle(pts)
        pts.sort(key=lambda p: p.level)  # any tie-break yields a linear extension
        self._order = pts
        self._i = 0

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        pass

    def _target(self) -> GridPoint | None:
        return self._order[self._i] if self._i < len(self._order) else None

    def answer(self, seq: tuple[GridPoint, ...], j: int) -> int:
        z = self._target()
        if z is None:
            return 1
        p = seq[j - 1]
        for k in range(1, self.q + 1):
            if z.coord(k) > p.coord(k):
                return k
        return 1  # unreachable while targets remain

    def choose_point(
        self, seq: tuple[GridPoint, ...], constraints: tuple[tuple[int, int], ...]
    ) -> GridPoint:
        z = self._target()
        if z is None:
            return _minimal_conforming(self.q, seq, constraints)
        self._i += 1
        return z


class RandomCoordinator:
    """Uniformly random coordinate answers; the minimal conforming point at
    stage end.  May hand builder a large coordinate early, so plays last at
    most, not exactly, (n-1)^q + 1 stages."""

    def __init__(self, q: int, rng: random.Random):
        self.q = q
        self.rng = rng

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        pass

    def answer(self, seq: tuple[GridPoint, ...], j: int) -> int:
        return self.rng.randint(1, self.q)

    def choose_point(self, seq, constraints) -> GridPoint:
        return _minimal_conforming(self.q, seq, constraints)


class RandomLatticeBuilder:
    """Random conforming builder: a geometric number of picks per stage,
    uniformly random targets (for adapter fidelity tests)."""

    def __init__(self, q: int, rng: random.Random, stop_prob: float = 0.4):
        self.q = q
        self.rng = rng
        self.stop_prob = stop_prob
        self._steps = 0

    def start_stage(self, seq) -> None:
        self._steps = 0

    def pick(self, seq) -> int | None:
        if self._steps > 0 and self.rng.random() < self.stop_prob:
            return None
        self._steps += 1
        return self.rng.randint(1, len(seq))

    def observe(self, k: int) -> None:
        pass


def builder_strategy(q: int, n: int) -> MaximalElementsBuilder:
    """The winning builder for the (q, n)-lattice game."""
    return MaximalElementsBuilder(q, n)


def coordinator_strategy(q: int, n: int) -> LevelFillingCoordinator:
    """The step-count lower-bound coordinator for the (q, n)-lattice game."""
    return LevelFillingCoordinator(q, n)


# --- the online Ramsey game engine ---


class _PathTracker:
    """Incremental longest-path table over the drawn colored edges."""

    def __init__(self, k: int, q: int):
        self.k = k
        self.q = q
        self.lens: dict[tuple[tuple[int, ...], int], int] = {}
        self.back: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
        self.edge_colors: dict[tuple[int, ...], int] = {}

    def length(self, tup: tuple[int, ...], color: int) -> int:
        return self.lens.get((tup, color), self.k - 1)

    def add(self, edge: tuple[int, ...], color: int) -> tuple[int, int]:
        """Record the edge; returns (new length at its suffix, color)."""
        self.edge_colors[edge] = color
        prefix, suffix = edge[:-1], edge[1:]
        cand = self.length(prefix, color) + 1
        if cand > self.length(suffix, color):
            self.lens[(suffix, color)] = cand
            self.back[(suffix, color)] = prefix
        return self.length(suffix, color), color

    def extract(self, suffix: tuple[int, ...], color: int) -> MonotonePath:
        path = list(suffix)
        cur = suffix
        while self.length(cur, color) > self.k - 1:
            prev = self.back[(cur, color)]
            path.insert(0, prev[0])
            cur = prev
        return MonotonePath(tuple(path), color)

    def verify(self, path: MonotonePath) -> bool:
        vs = path.vertices
        if list(vs) != sorted(set(vs)):
            return False
        for i in range(len(vs) - self.k + 1):
            if self.edge_colors.get(vs[i : i + self.k]) != path.color:
                return False
        return True


def play_online_ramsey(
    builder,
    painter,
    q: int,
    n: int,
    k: int = 2,
    modified: bool = False,
    stop_at_stage_end: bool = False,
    max_stages: int = 10_000,
) -> tuple[GameTranscript, MonotonePath]:
    """Run the online (vertex) Ramsey game until a monochromatic monotone path
    of n vertices exists among the drawn edges.

    With modified=True, builder must draw at least one edge in every stage
    t >= k.  With stop_at_stage_end=True the win is only checked between
    stages, which aligns edge counts exactly with lattice-game step counts.
    """
    tracker = _PathTracker(k, q)
    tr = GameTranscript(k, q, n)
    win: tuple[tuple[int, ...], int] | None = None
    for t in range(1, max_stages + 1):
        builder.start_stage(t)
        painter.start_stage(t)
        edges: list[DrawnEdge] = []
        while True:
            prefix = builder.propose()
            if prefix is None:
                break
            edge = tuple(prefix) + (t,)
            if len(edge) != k or list(edge) != sorted(set(edge)) or edge[-2] >= t:
                raise NonConformingMove(f"builder proposed bad edge {edge}")
            color = painter.color(edge)
            if not 1 <= color <= q:
                raise NonConformingMove(f"painter used bad color {color}")
            builder.observe(edge, color)
            edges.append(DrawnEdge(edge, color))
            length, _ = tracker.add(edge, color)
            if length >= n and win is None:
                win = (edge[1:], color)
            if win and not stop_at_stage_end:
                break
        if modified and t >= k and not edges and win is None:
            raise NonConformingMove(f"modified game: stage {t} drew no edge")
        tr.stages.append(OnlineStage(t, tuple(edges)))
        if win:
            path = tracker.extract(*win)
            path = MonotonePath(path.vertices[-n:], path.color)
            assert tracker.verify(path)
            return tr, path
    raise RuntimeError(f"no monochromatic path of {n} within {max_stages} stages")


class FixedColorPainter:
    def __init__(self, color: int = 1):
        self._color = color

    def start_stage(self, t: int) -> None:
        pass

    def color(self, edge: tuple[int, ...]) -> int:
        return self._color


class RandomPainter:
    def __init__(self, q: int, rng: random.Random):
        self.q = q
        self.rng = rng

    def start_stage(self, t: int) -> None:
        pass

    def color(self, edge: tuple[int, ...]) -> int:
        return self.rng.randint(1, self.q)


class ExtremalPainter:
    """The painter behind N_2(q, n-1) <= V_2(q, n): color by a fixed path-free
    base coloring on the labels of vertices that head at least one edge, so a
    monochromatic path of n vertices needs at least N_2(q, n-1) drawn edges."""

    def __init__(self, q: int, n: int):
        from monopath.witnesses import grid_witness_k2

        self.base = grid_witness_k2(q, n - 1)
        self.labels: dict[int, int] = {}

    def start_stage(self, t: int) -> None:
        pass

    def color(self, edge: tuple[int, int]) -> int:
        j, t = edge
        if t not in self.labels:
            self.labels[t] = len(self.labels) + 1
        if j not in self.labels:
            return 1
        i1, i2 = self.labels[j], self.labels[t]
        if i2 <= self.base.n_vertices:
            return self.base.color_of((i1, i2))
        return 1


class RandomOnlineBuilder:
    """Random conforming online builder for the graph game (adapter tests)."""

    def __init__(self, rng: random.Random, stop_prob: float = 0.4):
        self.rng = rng
        self.stop_prob = stop_prob
        self._t = 1
        self._steps = 0

    def start_stage(self, t: int) -> None:
        self._t = t
        self._steps = 0

    def propose(self) -> tuple[int, ...] | None:
        if self._t == 1:
            return None
        if self._steps > 0 and self.rng.random() < self.stop_prob:
            return None
        self._steps += 1
        return (self.rng.randint(1, self._t - 1),)

    def observe(self, edge, color) -> None:
        pass


# --- the game-equivalence adapters (kappa = 2) ---


class PainterAsCoordinator:
    """lattice_to_online direction: coordinate answers mirror painter's colors
    and chosen points are the per-color longest-path profiles."""

    def __init__(self, painter, q: int):
        self.painter = painter
        self.q = q
        self._profiles: list[GridPoint] = []
        self._pending: list[int] = []
        self._t = 0

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        self._t = len(seq) + 1
        self.painter.start_stage(self._t)
        self._pending = [1] * self.q

    def answer(self, seq: tuple[GridPoint, ...], j: int) -> int:
        c = self.painter.color((j, self._t))
        self._pending[c - 1] = max(
            self._pending[c - 1], self._profiles[j - 1].coord(c) + 1
        )
        return c

    def choose_point(self, seq, constraints) -> GridPoint:
        p = GridPoint(tuple(self._pending))
        self._profiles.append(p)
        return p


class CoordinatorAsPainter:
    """online_to_lattice direction: colors mirror coordinate answers; the
    mirror game's points are the coordinator's own stage choices."""

    def __init__(self, coordinator, q: int):
        self.coordinator = coordinator
        self.q = q
        self._seq: list[GridPoint] = []
        self._constraints: list[tuple[int, int]] = []
        self._open = False

    def _close_stage(self) -> None:
        if self._open:
            p = self.coordinator.choose_point(tuple(self._seq), tuple(self._constraints))
            self._seq.append(p)

    def start_stage(self, t: int) -> None:
        self._close_stage()
        self._constraints = []
        self._open = True
        self.coordinator.start_stage(tuple(self._seq))

    def color(self, edge: tuple[int, int]) -> int:
        j, _t = edge
        k = self.coordinator.answer(tuple(self._seq), j)
        self._constraints.append((j, k))
        return k


class LatticeBuilderAsOnline:
    """Builder adapter: drive a lattice builder as an online-game builder,
    maintaining the profile mirror of the sequence."""

    def __init__(self, lb, q: int):
        self.lb = lb
        self.q = q
        self._profiles: list[GridPoint] = []
        self._pending: list[int] = []
        self._t = 0

    def start_stage(self, t: int) -> None:
        if self._t:
            self._profiles.append(GridPoint(tuple(self._pending)))
        self._t = t
        self._pending = [1] * self.q
        self.lb.start_stage(tuple(self._profiles))

    def propose(self) -> tuple[int, ...] | None:
        if not self._profiles:
            return None
        j = self.lb.pick(tuple(self._profiles))
        if j is None:
            return None
        return (j,)

    def observe(self, edge: tuple[int, int], color: int) -> None:
        j, _t = edge
        self.lb.observe(color)
        self._pending[color - 1] = max(
            self._pending[color - 1], self._profiles[j - 1].coord(color) + 1
        )


class OnlineBuilderAsLattice:
    """Builder adapter, reverse direction."""

    def __init__(self, ob, q: int):
        self.ob = ob
        self.q = q
        self._t = 0
        self._last: int | None = None

    def start_stage(self, seq: tuple[GridPoint, ...]) -> None:
        self._t = len(seq) + 1
        self.ob.start_stage(self._t)

    def pick(self, seq) -> int | None:
        prefix = self.ob.propose()
        if prefix is None:
            return None
        self._last = prefix[0]
        return prefix[0]

    def observe(self, k: int) -> None:
        self.ob.observe((self._last, self._t), k)


def lattice_to_online(painter, q: int) -> PainterAsCoordinator:
    return PainterAsCoordinator(painter, q)


def online_to_lattice(coordinator, q: int) -> CoordinatorAsPainter:
    return CoordinatorAsPainter(coordinator, q)


# --- transcript text serialization ---


def write_lattice_transcript(tr: LatticeTranscript, stream) -> None:
    stream.write(f"lattice q {tr.q} n {tr.n}\n")
    for i, stage in enumerate(tr.stages, start=1):
        steps = " ".join(f"{j}:{k}" for (j, k) in stage.steps)
        point = ",".join(str(x) for x in stage.point.coords)
        flag = "new" if stage.is_new else "wasted"
        stream.write(f"stage {i} steps [{steps}] point {point} {flag}\n")


def read_lattice_transcript(stream) -> LatticeTranscript:
    header = stream.readline().split()
    if len(header) != 5 or header[0] != "lattice":
        raise ValueError("not a lattice transcript")
    tr = LatticeTranscript(int(header[2]), int(header[4]))
    for line in stream:
        parts = line.split()
        if not parts:
            continue
        if parts[0] != "stage":
            raise ValueError(f"bad transcript line: {line!r}")
        raw = line[line.index("[") + 1 : line.index("]")].split()
        steps = tuple((int(a), int(b)) for a, b in (s.split(":") for s in raw))
        point = GridPoint(tuple(int(x) for x in parts[-2].split(",")))
        tr.stages.append(LatticeStage(steps, point, parts[-1] == "new"))
    return tr


def write_game_transcript(tr: GameTranscript, stream) -> None:
    stream.write(f"online k {tr.k} q {tr.q} n {tr.n}\n")
    for stage in tr.stages:
        stream.write(f"stage {stage.t}\n")
        for de in stage.edges:
            stream.write(f"edge {','.join(map(str, de.edge))} color {de.color}\n")


def read_game_transcript(stream) -> GameTranscript:
    header = stream.readline().split()
    if len(header) != 7 or header[0] != "online":
        raise ValueError("not an online game transcript")
    tr = GameTranscript(int(header[2]), int(header[4]), int(header[6]))
    stage: list[DrawnEdge] = []
    t = None
    for line in stream:
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "stage":
            if t is not None:
                tr.stages.append(OnlineStage(t, tuple(stage)))
            t, stage = int(parts[1]), []
        elif parts[0] == "edge":
            stage.append(DrawnEdge(tuple(int(x) for x in parts[1].split(",")), int(parts[3])))
        else:
            raise ValueError(f"bad transcript line: {line!r}")
    if t is not None:
        tr.stages.append(OnlineStage(t, tuple(stage)))
    return tr


def validate_game_transcript(tr: GameTranscript) -> tuple[bool, MonotonePath | None]:
    """Replay a recorded online game: edges legal, and the play ends exactly
    when a monochromatic monotone path of n vertices first exists."""
    tracker = _PathTracker(tr.k, tr.q)
    win: tuple[tuple[int, ...], int] | None = None
    for stage in tr.stages:
        for de in stage.edges:
            if win is not None:
                return False, None  # edges after the win
            e = de.edge
            if len(e) != tr.k or list(e) != sorted(set(e)) or e[-1] != stage.t:
                return False, None
            length, _ = tracker.add(e, de.color)
            if length >= tr.n:
                win = (e[1:], de.color)
    if win is None:
        return False, None
    path = tracker.extract(*win)
    path = MonotonePath(path.vertices[-tr.n :], path.color)
    return tracker.verify(path), path
