"""Noncrossing convex polygon families and the convex-position application.

Bodies are strictly convex polygons with exact rational coordinates, listed
by the x-coordinate of their unique leftmost vertex.  Each ordered triple is
classified by its strong orientations along the hull of its union: red when
only strong-clockwise, blue when only strong-counterclockwise, green when
both.  The classification is transitive, so a monochromatic monotone path
promotes to a monochromatic clique whose bodies are in convex position.

All predicates run on Fractions; float inputs are promoted exactly.  The
smooth-body general-position conditions (common tangents) have no exact
polygonal analogue; the substitute non-degeneracy condition is that hull
vertices of every triple's union have unique owners and no foreign vertex
lies on a hull edge.  A perturbation utility jitters vertices when such
ownership ties occur.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import cos, pi, sin
from typing import IO, Iterable, Sequence

import numpy as np

from monopath.coloring import OrderedColoring, colex_tuples

Point = tuple[Fraction, Fraction]


class InvalidBodyError(ValueError):
    pass


class InvalidFamilyError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class DegenerateFamilyError(ValueError):
    """Hull-vertex ownership is ambiguous; perturb the input and retry."""


def _frac_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Andrew monotone chain, strict turns only: output is CCW with no three
    collinear hull vertices, starting at the lexicographically smallest point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def point_in_hull(p: Point, hull: list[Point]) -> int:
    """1 strictly inside, 0 on the boundary, -1 strictly outside (hull CCW;
    degenerate hulls of <= 2 points are a point or a segment)."""
    if not hull:
        return -1
    if len(hull) == 1:
        return 0 if p == hull[0] else -1
    if len(hull) == 2:
        a, b = hull
        if cross(a, b, p) != 0:
            return -1
        within = min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[
            1
        ] <= max(a[1], b[1])
        return 0 if within else -1
    on_edge = False
    for i in range(len(hull)):
        c = cross(hull[i], hull[(i + 1) % len(hull)], p)
        if c < 0:
            return -1
        if c == 0:
            on_edge = True
    return 0 if on_edge else 1


@dataclass(eq=False)
class ConvexBody:
    """A strictly convex polygon; vertices are stored CCW starting at the
    unique leftmost vertex."""

    vertices: tuple[Point, ...]
    id: int | None = None

    @staticmethod
    def from_points(points: Iterable, id: int | None = None) -> "ConvexBody":
        pts = [_frac_point(p) for p in points]
        hull = convex_hull(pts)
        if len(hull) < 3:
            raise InvalidBodyError("body needs >= 3 vertices in convex position")
        if len(hull) != len(set(pts)):
            raise InvalidBodyError("body has non-extreme or collinear vertices")
        min_x = min(p[0] for p in hull)
        leftmost = [p for p in hull if p[0] == min_x]
        if len(leftmost) != 1:
            raise InvalidBodyError("leftmost vertex is not unique")
        start = hull.index(leftmost[0])
        return ConvexBody(tuple(hull[start:] + hull[:start]), id)

    @property
    def leftmost(self) -> Point:
        return self.vertices[0]

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains(self, p: Point) -> int:
        return point_in_hull(p, list(self.vertices))


def _segment_intersection_points(
    a: Point, b: Point, c: Point, d: Point
) -> list[Point] | None:
    """Intersection of closed segments ab and cd: a list of points, or None
    for a collinear overlap of positive length."""
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    if d1 == d2 == 0:  # collinear
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return []
        if lo == hi:
            return [lo]
        return None
    if (d1 <= 0 <= d2 or d2 <= 0 <= d1) and (d3 <= 0 <= d4 or d4 <= 0 <= d3):
        t_num = d3
        t_den = d3 - d4
        x = a[0] + (b[0] - a[0]) * t_num / t_den
        y = a[1] + (b[1] - a[1]) * t_num / t_den
        return [(x, y)]
    return []


def boundary_intersections(b1: ConvexBody, b2: ConvexBody) -> list[Point] | None:
    """Distinct boundary intersection points, or None for a shared arc."""
    out: set[Point] = set()
    for (a, b) in b1.edges():
        for (c, d) in b2.edges():
            pts = _segment_intersection_points(a, b, c, d)
            if pts is None:
                return None
            out.update(pts)
    return sorted(out)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(eq=False)
class ConvexFamily:
    """Bodies sorted by strictly increasing leftmost x; ids are 1..N."""

    bodies: tuple[ConvexBody, ...]
    report: ValidationReport

    def __len__(self) -> int:
        return len(self.bodies)


def validate_family(raw_bodies: Sequence) -> ConvexFamily:
    """Sort, renumber, and check a polygon family.

    Hard violations (crossing pair, shared arc, duplicate leftmost x, triple
    not in convex position, malformed body) raise InvalidFamilyError; boundary
    tangencies are reported as warnings because the smooth-tangency conditions
    cannot be certified on polygon inputs.
    """
    report = ValidationReport()
    bodies: list[ConvexBody] = []
    for idx, rb in enumerate(raw_bodies):
        try:
            body = rb if isinstance(rb, ConvexBody) else ConvexBody.from_points(rb)
            bodies.append(body)
        except InvalidBodyError as exc:
            report.violations.append(f"body {idx + 1}: {exc}")
    if report.violations:
        raise InvalidFamilyError(report.violations)

    bodies.sort(key=lambda b: (b.leftmost[0], b.leftmost[1]))
    xs = [b.leftmost[0] for b in bodies]
    for i in range(len(xs) - 1):
        if xs[i] == xs[i + 1]:
            report.violations.append(
                f"duplicate leftmost x between bodies {i + 1} and {i + 2}"
            )
    bodies = [ConvexBody(b.vertices, i + 1) for i, b in enumerate(bodies)]

    for i, j in itertools.combinations(range(len(bodies)), 2):
        pts = boundary_intersections(bodies[i], bodies[j])
        if pts is None:
            report.violations.append(f"crossing pair ({i + 1},{j + 1}): shared arc")
        elif len(pts) > 2:
            report.violations.append(
                f"crossing pair ({i + 1},{j + 1}): {len(pts)} boundary points"
            )
        elif pts:
            report.warnings.append(
                f"pair ({i + 1},{j + 1}) shares {len(pts)} boundary point(s); "
                "tangency conditions unverifiable on polygons"
            )

    for i, j, k in itertools.combinations(range(len(bodies)), 3):
        triple = [bodies[i], bodies[j], bodies[k]]
        if not is_convex_position(triple):
            report.violations.append(
                f"triple ({i + 1},{j + 1},{k + 1}) not in convex position"
            )

    if report.violations:
        raise InvalidFamilyError(report.violations)
    return ConvexFamily(tuple(bodies), report)


def is_convex_position(bodies: Sequence[ConvexBody]) -> bool:
    """True iff every body has a vertex strictly outside the hull of the other
    bodies' vertex unions."""
    if len(bodies) <= 1:
        return True
    for idx, body in enumerate(bodies):
        other_pts = [v for j, b in enumerate(bodies) if j != idx for v in b.vertices]
        hull = convex_hull(other_pts)
        if not any(point_in_hull(v, hull) == -1 for v in body.vertices):
            return False
    return True


def _hull_with_owners(
    members: Sequence[ConvexBody],
) -> tuple[list[Point], list[int]]:
    """Hull of the union with each hull vertex's owning body id; degenerate
    ownership (shared vertices, foreign points on hull edges) raises."""
    owner: dict[Point, list[int]] = {}
    for b in members:
        for v in b.vertices:
            owner.setdefault(v, []).append(b.id)
    hull = convex_hull(owner.keys())
    labels = []
    for h in hull:
        owners = owner[h]
        if len(owners) > 1:
            raise DegenerateFamilyError(f"hull vertex {h} shared by bodies {owners}")
        labels.append(owners[0])
    hull_set = set(hull)
    for p, owners in owner.items():
        if p in hull_set:
            continue
        if point_in_hull(p, hull) == 0:
            raise DegenerateFamilyError(
                f"vertex {p} of body {owners} lies on a hull edge"
            )
    return hull, labels


def hull_label_sequence(
    family: ConvexFamily, i: int, j: int, k: int
) -> list[int]:
    """Clockwise runs of hull-vertex ownership around conv(C_i u C_j u C_k),
    starting at C_i's leftmost vertex (the leftmost point of the union)."""
    if not (1 <= i < j < k <= len(family)):
        raise ValueError("need family indices i < j < k")
    members = [family.bodies[i - 1], family.bodies[j - 1], family.bodies[k - 1]]
    hull, labels = _hull_with_owners(members)
    start_pt = members[0].leftmost
    if start_pt not in hull:
        raise DegenerateFamilyError("leftmost vertex of C_i is not a hull vertex")
    start = hull.index(start_pt)
    # hull is CCW; clockwise order reverses it, keeping the start first
    cw_labels = [labels[start]] + [
        labels[(start - t) % len(labels)] for t in range(1, len(labels))
    ]
    runs = [cw_labels[0]]
    for lab in cw_labels[1:]:
        if lab != runs[-1]:
            runs.append(lab)
    if len(runs) > 1 and runs[-1] == runs[0]:
        runs.pop()  # the starting arc wraps around
    assert runs[0] == members[0].id
    return runs


class TripleOrientation(Enum):
    CW_ONLY = "cw"
    CCW_ONLY = "ccw"
    BOTH = "both"


def strong_orientations(family: ConvexFamily, i: int, j: int, k: int) -> TripleOrientation:
    """Strong orientation(s) of the triple: clockwise holds iff some j-run
    precedes some k-run in the clockwise label sequence from C_i's leftmost
    vertex, and symmetrically for counterclockwise.

    Cross-checked structural facts: C_k never separates the triple, and the
    triple has both strong orientations iff C_j separates it (owns two runs).
    """
    runs = hull_label_sequence(family, i, j, k)

    def has_j_before_k(seq: list[int]) -> bool:
        j_seen = False
        for lab in seq:
            if lab == j:
                j_seen = True
            elif lab == k and j_seen:
                return True
        return False

    cw = has_j_before_k(runs)
    ccw = has_j_before_k([runs[0]] + runs[:0:-1])
    if not (cw or ccw):
        raise DegenerateFamilyError(f"triple ({i},{j},{k}) has no strong orientation")
    assert runs.count(k) == 1, f"C_k separates ({i},{j},{k}): runs {runs}"
    j_separates = runs.count(j) >= 2
    assert (cw and ccw) == j_separates, (
        f"both-orientations/separator mismatch on ({i},{j},{k}): runs {runs}"
    )
    if cw and ccw:
        return TripleOrientation.BOTH
    return TripleOrientation.CW_ONLY if cw else TripleOrientation.CCW_ONLY


RED, BLUE, GREEN = 1, 2, 3
_ORIENTATION_COLOR = {
    TripleOrientation.CW_ONLY: RED,
    TripleOrientation.CCW_ONLY: BLUE,
    TripleOrientation.BOTH: GREEN,
}


def _triple_color(args) -> tuple[int, int]:
    family, rank, (i, j, k) = args
    return rank, _ORIENTATION_COLOR[strong_orientations(family, i, j, k)]


def color_triples(family: ConvexFamily, workers: int = 1) -> OrderedColoring:
    """The red/blue/green triple coloring (red=1, blue=2, green=3), asserted
    transitive.  The per-triple loop is independent; workers > 1 splits it
    with deterministic assembly."""
    n = len(family)
    ranked = list(enumerate(colex_tuples(n, 3)))
    cols = np.zeros(len(ranked), dtype=np.int32)
    if workers > 1 and len(ranked) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rank, color in pool.map(
                _triple_color,
                [(family, r, t) for r, t in ranked],
                chunksize=max(1, len(ranked) // (4 * workers)),
            ):
                cols[rank] = color
    else:
        for rank, tup in ranked:
            cols[rank] = _triple_color((family, rank, tup))[1]
    out = OrderedColoring(3, 3, n, cols)
    from monopath.transitive import is_transitive

    verdict = is_transitive(out)
    assert verdict is True, f"orientation coloring not transitive: {verdict}"
    return out


def find_convex_position(family: ConvexFamily, n: int) -> list[ConvexBody]:
    """n bodies in convex position: color triples, promote a monochromatic
    monotone path to a clique, and verify convex position of the result."""
    from monopath.transitive import extract_clique

    if n <= 2:
        chosen = list(family.bodies[:n])
        assert is_convex_position(chosen)
        return chosen
    coloring = color_triples(family)
    clique, _color = extract_clique(coloring, n)
    chosen = [family.bodies[i - 1] for i in clique]
    assert is_convex_position(chosen), "monochromatic clique not in convex position"
    return chosen


def perturb_family(
    raw_bodies: Sequence[ConvexBody], epsilon, seed: int = 0
) -> list[ConvexBody]:
    """Jitter every vertex by a rational offset in (-epsilon, epsilon); used
    to break hull-ownership ties on degenerate inputs."""
    rng = random.Random(seed)
    eps = Fraction(epsilon)
    out = []
    for b in raw_bodies:
        pts = [
            (
                x + eps * Fraction(rng.randint(-999, 999), 1000),
                y + eps * Fraction(rng.randint(-999, 999), 1000),
            )
            for (x, y) in b.vertices
        ]
        out.append(ConvexBody.from_points(pts, b.id))
    return out


# --- generators for fixtures and randomized trials ---


def _regular_body(cx, cy, r, nv: int, rng: random.Random) -> ConvexBody:
    while True:
        angles = sorted(rng.uniform(0, 2 * pi) for _ in range(nv))
        pts = []
        for a in angles:
            rad = r * (1 + 0.2 * rng.uniform(-1, 1))
            pts.append(
                (
                    Fraction(round((cx + rad * cos(a)) * 2048), 2048),
                    Fraction(round((cy + rad * sin(a)) * 2048), 2048),
                )
            )
        hull = convex_hull(pts)  # rounding can push samples off the hull
        if len(hull) < 3:
            continue
        try:
            return ConvexBody.from_points(hull)
        except InvalidBodyError:
            continue


def staircase_family(n: int, descending: bool = True) -> ConvexFamily:
    """Disjoint small bodies along a strictly convex-up arc (all red) or
    convex-down arc (all blue): each middle body bulges past the chord of the
    outer two without ever separating them."""
    rng = random.Random(0)
    sign = 1 if descending else -1
    bodies = []
    for i in range(n):
        cx = 10.0 * i
        cy = sign * (0.2 * i * (n - 1 - i) * 10 - 3.0 * i)
        bodies.append(_regular_body(cx, cy, 2.0, 6, rng))
    return validate_family(bodies)


def separator_family(n: int) -> ConvexFamily:
    """Vertical slabs with strictly concave heights: every middle body pokes
    above and below the hull of any two neighbors, so it separates its triple
    and the coloring is all green."""
    bodies = []
    for i in range(n):
        h = 10 + 3 * i * (n - 1 - i)
        x = Fraction(4 * i)
        pts = [
            (x, Fraction(0)),
            (x + 1, Fraction(-h)),
            (x + 2, Fraction(0)),
            (x + 1, Fraction(h)),
        ]
        bodies.append(ConvexBody.from_points(pts))
    return validate_family(bodies)


def clockwise_nontransitivity_fixture() -> ConvexFamily:
    """Four bodies showing that 'has a strong-clockwise orientation' is not
    transitive: (C1,C2,C3) and (C2,C3,C4) have one (red resp. green), while
    (C1,C3,C4) has only a strong-counterclockwise orientation (blue).

    C1 is a right-pointing wedge separating C2 (above) from C3; C3 is a tall
    column separating C2 from C4; C4 sits low, under the wedge.
    """
    f = Fraction
    c1 = [(-1, 0), (1, -8), (14, 0), (1, 8)]
    c2 = [(f(23, 4), 5), (f(25, 4), 5), (6, f(28, 5))]
    c3 = [
        (f(77, 10), -3),
        (f(78, 10), -9),
        (f(82, 10), -9),
        (f(83, 10), -3),
        (f(82, 10), f(33, 10)),
        (f(78, 10), f(33, 10)),
    ]
    c4 = [(f(23, 2), -3), (12, f(-18, 5)), (f(25, 2), -3), (12, f(-12, 5))]
    return validate_family([c1, c2, c3, c4])


def random_family(
    n_bodies: int,
    seed: int = 0,
    spread: float = 60.0,
    max_tries: int = 60,
    mode: str = "arc",
) -> ConvexFamily:
    """A seeded valid family, rejected and resampled until validation passes.

    mode="arc": small convex polygons with centers jittered around a circular
    arc, which keeps every triple in convex position (triples come out red or
    blue only).  mode="mixed": the arc layout with a random subset of bodies
    stretched vertically, which makes some of them separate their neighbors
    and adds green triples.
    """
    rng = random.Random(seed)
    for _ in range(max_tries):
        bodies = []
        n = n_bodies
        base = rng.uniform(0, 2 * pi)
        angles = sorted(base + (1.7 * pi) * t / n + rng.uniform(-0.2, 0.2) / n for t in range(n))
        for a in angles:
            radius = spread * (1 + rng.uniform(-0.04, 0.04))
            cx = radius * cos(a)
            cy = radius * sin(a)
            bodies.append(_regular_body(cx, cy, rng.uniform(1.5, 3.5), rng.randint(5, 9), rng))
        if mode == "mixed":
            bodies = [
                _stretch_vertically(b, Fraction(rng.randint(4, 9)))
                if rng.random() < 0.35
                else b
                for b in bodies
            ]
        try:
            return validate_family(bodies)
        except (InvalidFamilyError, InvalidBodyError):
            continue
    raise RuntimeError(f"could not generate a valid family after {max_tries} tries")


def _stretch_vertically(body: ConvexBody, factor: Fraction) -> ConvexBody:
    ys = [y for (_x, y) in body.vertices]
    mid = (min(ys) + max(ys)) / 2
    return ConvexBody.from_points(
        [(x, mid + (y - mid) * factor) for (x, y) in body.vertices]
    )


def random_separator_family(n_bodies: int, seed: int = 0, max_tries: int = 60) -> ConvexFamily:
    """A seeded valid family of jittered vertical slabs with strictly concave
    heights: middle bodies separate their triples, so most triples are green."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        bodies = []
        for i in range(n_bodies):
            h = 10 + 3 * i * (n_bodies - 1 - i) + rng.uniform(0, 1.5)
            x = 4 * i + rng.uniform(-0.5, 0.5)
            w = rng.uniform(0.7, 1.3)
            tilt = rng.uniform(-1, 1)
            pts = [
                (x, tilt),
                (x + w, -h),
                (x + 2 * w, -tilt),
                (x + w, h),
            ]
            bodies.append(
                ConvexBody.from_points(
                    [(Fraction(round(px * 512), 512), Fraction(round(py * 512), 512)) for px, py in pts]
                )
            )
        try:
            return validate_family(bodies)
        except (InvalidFamilyError, InvalidBodyError):
            continue
    raise RuntimeError(f"could not generate a valid family after {max_tries} tries")


# --- family file format: one body per line, "m x1 y1 ... xm ym" ---


def write_family(bodies: Sequence[ConvexBody], stream: IO[str]) -> None:
    for b in bodies:
        coords = " ".join(f"{p[0]} {p[1]}" for p in b.vertices)
        stream.write(f"{len(b.vertices)} {coords}\n")


def read_family_file(stream: IO[str]) -> list[ConvexBody]:
    bodies = []
    for line in stream:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        m = int(tokens[0])
        if len(tokens) != 1 + 2 * m:
            raise ValueError(f"expected {2 * m} coordinates, got {len(tokens) - 1}")
        pts = [
            (Fraction(tokens[1 + 2 * t]), Fraction(tokens[2 + 2 * t])) for t in range(m)
        ]
        bodies.append(ConvexBody.from_points(pts))
    return bodies
