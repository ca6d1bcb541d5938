import io
import random
from fractions import Fraction

import pytest

from monopath.geometry import (
    RED,
    BLUE,
    GREEN,
    ConvexBody,
    DegenerateFamilyError,
    InvalidBodyError,
    InvalidFamilyError,
    TripleOrientation,
    boundary_intersections,
    color_triples,
    convex_hull,
    find_convex_position,
    hull_label_sequence,
    is_convex_position,
    perturb_family,
    point_in_hull,
    random_family,
    read_family_file,
    clockwise_nontransitivity_fixture,
    separator_family,
    staircase_family,
    strong_orientations,
    validate_family,
    write_family,
)
from monopath.transitive import is_transitive


def triangle(cx, cy, r=1):
    return [(cx - r, cy - r), (cx + r, cy - r), (cx, cy + r)]


class TestPrimitives:
    def test_hull_is_ccw_strict(self):
        pts = [(Fraction(x), Fraction(y)) for x in range(3) for y in range(3)]
        hull = convex_hull(pts)
        assert len(hull) == 4  # collinear boundary points dropped
        assert hull[0] == (0, 0)

    def test_point_in_hull_signs(self):
        hull = convex_hull([(Fraction(0), Fraction(0)), (Fraction(4), Fraction(0)), (Fraction(0), Fraction(4))])
        assert point_in_hull((Fraction(1), Fraction(1)), hull) == 1
        assert point_in_hull((Fraction(2), Fraction(0)), hull) == 0
        assert point_in_hull((Fraction(5), Fraction(5)), hull) == -1

    def test_boundary_intersections_crossing_count(self):
        a = ConvexBody.from_points([(-4, 0), (0, -4), (4, 0), (0, 4)])
        b = ConvexBody.from_points([(0, 0), (4, -4), (8, 0), (4, 4)])
        pts = boundary_intersections(a, b)
        assert pts == [(2, -2), (2, 2)]

    def test_crossing_quad_has_four_points(self):
        a = ConvexBody.from_points([(0, 2), (4, 0), (8, 2), (4, 4)])
        b = ConvexBody.from_points([(3, -1), (7, -3), (11, -1), (7, 3)])
        pts = boundary_intersections(a, b)
        assert pts is not None and len(pts) >= 3

    def test_shared_arc_detected(self):
        a = ConvexBody.from_points([(0, 2), (4, 0), (8, 2)])
        # b's top edge lies inside a's lower-right edge (slope 1/2)
        b = ConvexBody.from_points([(5, Fraction(1, 2)), (7, -2), (7, Fraction(3, 2))])
        assert boundary_intersections(a, b) is None


class TestBodyValidation:
    def test_needs_three_vertices(self):
        with pytest.raises(InvalidBodyError):
            ConvexBody.from_points([(0, 0), (1, 1)])

    def test_rejects_collinear(self):
        with pytest.raises(InvalidBodyError):
            ConvexBody.from_points([(0, 0), (1, 0), (2, 0), (1, 1)])

    def test_rejects_duplicate_leftmost(self):
        with pytest.raises(InvalidBodyError):
            ConvexBody.from_points([(0, 0), (0, 2), (2, 1)])

    def test_normalizes_to_ccw_from_leftmost(self):
        b = ConvexBody.from_points([(2, 1), (0, 0), (1, 2), (1, -1)])
        assert b.leftmost == (0, 0)
        assert len(b.vertices) == 4


class TestFamilyValidation:
    def test_disjoint_triangles_valid(self):
        fam = validate_family([triangle(0, 0), triangle(5, 5), triangle(10, 0)])
        assert len(fam) == 3 and fam.report.ok

    def test_crossing_pair_rejected(self):
        a = [(0, 0), (10, -1), (10, 1)]
        b = [(1, -5), (2, 5), (3, -5)]  # crosses the sliver 4 times
        with pytest.raises(InvalidFamilyError, match="crossing pair"):
            validate_family([a, b, triangle(20, 0)])

    def test_duplicate_leftmost_x_rejected(self):
        with pytest.raises(InvalidFamilyError, match="duplicate leftmost"):
            validate_family([triangle(0, 0), triangle(0, 10), triangle(8, 0)])

    def test_nested_triple_rejected(self):
        inner = triangle(5, 0, r=1)
        big_a = triangle(0, 0, r=3)
        big_b = triangle(10, 0, r=3)
        with pytest.raises(InvalidFamilyError, match="convex position"):
            validate_family([big_a, inner, big_b])

    def test_tangency_warned(self):
        a = [(0, 0), (4, -2), (4, 2)]
        b = [(4, 0), (8, -2), (8, 2)]  # touches a at one point
        fam = validate_family([a, b])
        assert any("boundary point" in w for w in fam.report.warnings)


class TestLabelsAndOrientations:
    def test_staircase_labels(self):
        fam = staircase_family(3)
        assert hull_label_sequence(fam, 1, 2, 3) == [1, 2, 3]
        assert strong_orientations(fam, 1, 2, 3) is TripleOrientation.CW_ONLY

    def test_mirror_configuration_ccw(self):
        fam = staircase_family(3, descending=False)
        assert strong_orientations(fam, 1, 2, 3) is TripleOrientation.CCW_ONLY

    def test_separator_labels_and_both(self):
        fam = separator_family(3)
        runs = hull_label_sequence(fam, 1, 2, 3)
        assert runs == [1, 2, 3, 2]
        assert strong_orientations(fam, 1, 2, 3) is TripleOrientation.BOTH

    def test_last_body_never_separates(self):
        for fam in (staircase_family(5), separator_family(5), random_family(7, seed=1)):
            n = len(fam)
            for i in range(1, n - 1):
                for j in range(i + 1, n):
                    for k in range(j + 1, n + 1):
                        runs = hull_label_sequence(fam, i, j, k)
                        assert runs.count(k) == 1

    def test_both_iff_middle_separates(self):
        for fam in (separator_family(5), random_family(8, seed=2)):
            n = len(fam)
            for i in range(1, n - 1):
                for j in range(i + 1, n):
                    for k in range(j + 1, n + 1):
                        runs = hull_label_sequence(fam, i, j, k)
                        orientation = strong_orientations(fam, i, j, k)
                        assert (runs.count(j) >= 2) == (
                            orientation is TripleOrientation.BOTH
                        )

    def test_shared_vertex_degenerate(self):
        a = [(0, 0), (4, -2), (3, 6)]
        b = [(3, 6), (8, 1), (7, 8)]  # shares the hull vertex (3, 6) with a
        c = triangle(12, 0)
        fam = validate_family([a, b, c])
        with pytest.raises(DegenerateFamilyError):
            hull_label_sequence(fam, 1, 2, 3)
        jiggled = validate_family(perturb_family(fam.bodies, Fraction(1, 100), seed=0))
        hull_label_sequence(jiggled, 1, 2, 3)  # perturbation clears the tie


class TestColoring:
    def test_staircase_all_red(self):
        col = color_triples(staircase_family(6))
        assert set(int(c) for c in col.colors) == {RED}

    def test_ascending_all_blue(self):
        col = color_triples(staircase_family(6, descending=False))
        assert set(int(c) for c in col.colors) == {BLUE}

    def test_separators_all_green(self):
        col = color_triples(separator_family(6))
        assert set(int(c) for c in col.colors) == {GREEN}

    def test_random_families_transitive(self):
        for seed in range(8):
            fam = random_family(random.Random(seed).randint(6, 10), seed=seed)
            assert is_transitive(color_triples(fam)) is True

    def test_random_separator_families_green_and_transitive(self):
        from monopath.geometry import random_separator_family

        for seed in range(5):
            fam = random_separator_family(7, seed=seed)
            col = color_triples(fam)
            assert is_transitive(col) is True
            assert GREEN in set(int(c) for c in col.colors)

    def test_mixed_mode_families_transitive(self):
        for seed in range(6):
            fam = random_family(8, seed=seed, mode="mixed")
            assert is_transitive(color_triples(fam)) is True

    def test_workers_agree(self):
        fam = random_family(7, seed=11)
        sequential = color_triples(fam, workers=1)
        parallel = color_triples(fam, workers=2)
        assert sequential == parallel


class TestConvexPosition:
    def test_two_disjoint_triangles(self):
        fam = validate_family([triangle(0, 0), triangle(5, 0)])
        assert is_convex_position(list(fam.bodies))

    def test_nested_pair_not_convex_position(self):
        big = ConvexBody.from_points([(0, 0), (10, -8), (10, 8)])
        small = ConvexBody.from_points(triangle(6, 0))
        assert not is_convex_position([big, small])

    def test_staircase_selection(self):
        fam = staircase_family(10)
        chosen = find_convex_position(fam, 5)
        assert len(chosen) == 5
        assert is_convex_position(chosen)

    def test_two_bodies_trivial(self):
        fam = staircase_family(4)
        assert len(find_convex_position(fam, 2)) == 2

    def test_random_families_selection(self):
        for seed in range(5):
            fam = random_family(9, seed=seed)
            coloring = color_triples(fam)
            from monopath.coloring import longest_mono_paths

            _, summary = longest_mono_paths(coloring)
            best = max(summary[c][0] for c in (1, 2, 3))
            chosen = find_convex_position(fam, best)
            assert is_convex_position(chosen)


class TestClockwiseNontransitivity:
    def test_fixture_colors(self):
        fam = clockwise_nontransitivity_fixture()
        assert strong_orientations(fam, 1, 2, 3) is not TripleOrientation.CCW_ONLY
        assert strong_orientations(fam, 2, 3, 4) is not TripleOrientation.CCW_ONLY
        # the weak relation "has a strong-clockwise orientation" is not
        # transitive: (1,3,4) lacks one
        assert strong_orientations(fam, 1, 3, 4) is TripleOrientation.CCW_ONLY

    def test_fixture_coloring_still_transitive(self):
        assert is_transitive(color_triples(clockwise_nontransitivity_fixture())) is True


class TestShapelyOracle:
    """Cross-check exact predicates against an independent float library."""

    def test_convex_position_matches_shapely(self):
        from shapely.geometry import MultiPoint, Point as ShapelyPoint

        for seed in range(6):
            fam = random_family(7, seed=seed)
            bodies = list(fam.bodies)
            for idx, body in enumerate(bodies):
                others = [
                    (float(x), float(y))
                    for j, b in enumerate(bodies)
                    if j != idx
                    for (x, y) in b.vertices
                ]
                hull = MultiPoint(others).convex_hull
                outside_float = any(
                    not hull.buffer(1e-9).contains(ShapelyPoint(float(x), float(y)))
                    for (x, y) in body.vertices
                )
                assert outside_float  # generator keeps every body extremal

    def test_hull_vertices_match_shapely(self):
        from shapely.geometry import MultiPoint

        fam = random_family(6, seed=9)
        pts = [v for b in fam.bodies[:3] for v in b.vertices]
        ours = convex_hull(pts)
        theirs = MultiPoint([(float(x), float(y)) for (x, y) in pts]).convex_hull
        assert len(ours) == len(theirs.exterior.coords) - 1


class TestFamilyIO:
    def test_round_trip(self):
        fam = staircase_family(4)
        buf = io.StringIO()
        write_family(fam.bodies, buf)
        back = read_family_file(io.StringIO(buf.getvalue()))
        refam = validate_family(back)
        assert [b.vertices for b in refam.bodies] == [b.vertices for b in fam.bodies]

    def test_comments_and_fractions(self):
        text = "# a triangle and friends\n3 0 0 2 0 1 1\n3 5 0 7 0 6 3/2\n"
        bodies = read_family_file(io.StringIO(text))
        assert len(bodies) == 2
        assert bodies[1].vertices[0] == (5, 0)

    def test_bad_count(self):
        with pytest.raises(ValueError, match="coordinates"):
            read_family_file(io.StringIO("3 0 0 1 1\n"))
