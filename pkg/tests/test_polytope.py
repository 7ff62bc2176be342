import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mldegree.errors import FanNotRefining, InputError, NotFullDimensional
from mldegree.polytope import (
    LatticePolytope,
    convex_hull,
    face,
    facet_offsets,
    lattice_volume,
    minkowski_sum,
    minkowski_sum_all,
    mixed_volume,
    normal_fan,
    reconstruct_vertices,
)

SQUARE = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
TRIANGLE = convex_hull([(0, 0), (1, 0), (0, 1)])

points2 = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6)


class TestHull:
    def test_pentagon_area(self):
        P = convex_hull([(0, 0), (2, 0), (3, 1), (1, 3), (0, 2), (1, 1)])
        assert len(P.vertices) == 5
        assert lattice_volume(P) == 6

    def test_interior_points_dropped(self):
        P = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0)])
        assert set(P.vertices) == {(0, 0), (2, 0), (0, 2), (2, 2)}

    def test_segment_and_point(self):
        assert convex_hull([(0, 0), (1, 1), (2, 2)]).affine_dim == 1
        assert convex_hull([(5, 5)]).affine_dim == 0

    def test_cube(self):
        pts = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)] + [(0, 0, 0)]
        C = convex_hull(pts)
        assert len(C.vertices) == 8 and len(C.facets) == 6
        assert lattice_volume(C) == 1

    def test_edge_point_dropped(self):
        P = convex_hull([(0, 0), (1, 0), (1, 1), (2, 0)])
        assert set(P.vertices) == {(0, 0), (2, 0), (1, 1)}

    def test_duplicates_and_collinear(self):
        assert len(convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (1, 0)]).vertices) == 4
        seg = convex_hull([(0, 0), (2, 0), (1, 0)])
        assert set(seg.vertices) == {(0, 0), (2, 0)} and seg.affine_dim == 1

    def test_relative_volume(self):
        assert lattice_volume(convex_hull([(0, 0), (2, 2)])) == 2
        assert lattice_volume(TRIANGLE) == Fraction(1, 2)

    def test_empty(self):
        with pytest.raises(InputError):
            convex_hull([])

    def test_contains_needs_full_dim(self):
        with pytest.raises(NotFullDimensional):
            convex_hull([(0, 0), (1, 1)]).contains((0, 0))

    def test_h_representation(self):
        P = LatticePolytope.from_h_representation(
            [(0, 0), (1, 0), (0, 1)], [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])
        assert set(P.vertices) == set(TRIANGLE.vertices)
        with pytest.raises(InputError):
            LatticePolytope.from_h_representation([(0, 0), (1, 0), (0, 1)], [((1, 0), 1)])

    @settings(max_examples=100, deadline=None)
    @given(points2)
    def test_hull_contains_inputs(self, pts):
        P = convex_hull(pts)
        if P.is_full_dimensional:
            assert all(P.contains(p) for p in pts)
        assert set(P.vertices) <= set(pts)


class TestMixedVolume:
    def test_square_triangle(self):
        assert mixed_volume([SQUARE, TRIANGLE]) == 2

    def test_self_mixed_volume(self):
        assert mixed_volume([SQUARE, SQUARE]) == 2
        assert mixed_volume([TRIANGLE, TRIANGLE]) == 1

    def test_segments(self):
        a = convex_hull([(0, 0), (2, 0)])
        b = convex_hull([(0, 0), (0, 3)])
        assert mixed_volume([a, b]) == 6

    def test_one_dimensional_lattice(self):
        seg = convex_hull([(0, 0), (2, 2)])
        assert mixed_volume([seg], basis=[[1, 1]]) == 2

    def test_minkowski_sum(self):
        P = minkowski_sum(SQUARE, TRIANGLE)
        assert lattice_volume(P) == Fraction(7, 2)
        assert lattice_volume(P) == lattice_volume(SQUARE) + lattice_volume(TRIANGLE) + mixed_volume([SQUARE, TRIANGLE])
        assert minkowski_sum_all([SQUARE, TRIANGLE]) == P

    def test_pentagon_sum(self):
        P = minkowski_sum(SQUARE, TRIANGLE)
        assert set(P.vertices) == {(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)}

    def test_empty_mixed_volume(self):
        assert mixed_volume([], basis=[]) == 1

    def test_face_of_five_point_polygon(self):
        P = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)])
        assert set(face(P, (-1, -1)).vertices) == {(2, 0), (1, 1)}

    def test_face(self):
        assert face(SQUARE, (1, 0)).vertices == ((0, 0), (0, 1))
        assert face(SQUARE, (0, 0)) == SQUARE

    @settings(max_examples=100, deadline=None)
    @given(points2, points2)
    def test_symmetry(self, a, b):
        P, Q = convex_hull(a), convex_hull(b)
        assert mixed_volume([P, Q]) == mixed_volume([Q, P])

    @settings(max_examples=100, deadline=None)
    @given(points2)
    def test_self_is_twice_area(self, a):
        P = convex_hull(a)
        area = lattice_volume(P) if P.is_full_dimensional else 0
        assert mixed_volume([P, P]) == 2 * area

    @settings(max_examples=100, deadline=None)
    @given(points2, points2, points2)
    def test_multilinear(self, a, b, c):
        P, Q, R = convex_hull(a), convex_hull(b), convex_hull(c)
        assert mixed_volume([minkowski_sum(P, Q), R]) == mixed_volume([P, R]) + mixed_volume([Q, R])

    @settings(max_examples=100, deadline=None)
    @given(points2, points2, st.tuples(st.integers(-5, 5), st.integers(-5, 5)), st.integers(1, 3))
    def test_translation_and_scaling(self, a, b, q, k):
        P, Q = convex_hull(a), convex_hull(b)
        assert mixed_volume([P.translate(q), Q]) == mixed_volume([P, Q])
        assert mixed_volume([P.scale(k), Q]) == k * mixed_volume([P, Q])

    def test_three_dimensional(self):
        cube = convex_hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
        simplex = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert mixed_volume([cube, cube, cube]) == 6
        assert mixed_volume([simplex, simplex, simplex]) == 1


class TestFan:
    def test_square_fan(self):
        fan = normal_fan(SQUARE)
        assert sorted(fan.rays) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
        assert all(fan.is_smooth(c) for c in fan.maximal_cones())
        assert all(fan.cone_dim(c) == 2 for c in fan.maximal_cones())

    def test_singular_cone(self):
        P = convex_hull([(0, 0), (2, 1), (1, 2)])
        fan = normal_fan(P)
        assert not all(fan.is_smooth(c) for c in fan.maximal_cones())

    def test_smallest_cone(self):
        fan = normal_fan(SQUARE)
        assert fan.smallest_cone([]) == ()
        i, j = fan.rays.index((1, 0)), fan.rays.index((-1, 0))
        assert fan.smallest_cone([i, j]) is None

    def test_offsets_round_trip(self):
        P = minkowski_sum(SQUARE, TRIANGLE)
        fan = normal_fan(P)
        off = facet_offsets([SQUARE, TRIANGLE, P], fan)
        for row, Q in zip(off.a, [SQUARE, TRIANGLE, P]):
            assert reconstruct_vertices(row, fan) == set(Q.vertices)

    def test_fan_must_refine(self):
        with pytest.raises(FanNotRefining):
            facet_offsets([SQUARE], normal_fan(TRIANGLE))

    def test_random_offsets_translate(self):
        rng = random.Random(3)
        for _ in range(20):
            P = convex_hull([(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
            if not P.is_full_dimensional:
                continue
            fan = normal_fan(P)
            q = (rng.randint(-4, 4), rng.randint(-4, 4))
            a = facet_offsets([P], fan).a[0]
            b = facet_offsets([P.translate(q)], fan).a[0]
            assert all(bj - aj == -(r[0] * q[0] + r[1] * q[1]) for aj, bj, r in zip(a, b, fan.rays))
