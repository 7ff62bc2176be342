from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mldegree.errors import (
    DegenerateElimination,
    InsufficientOrder,
    NonUnitConstantTerm,
    NotSquarefree,
    ZeroPolynomial,
)
from mldegree.exactmath import (
    IntSeries,
    MultiPoly,
    UniPoly,
    complex_roots_numeric,
    format_rational,
    parse_rational,
    poly_gcd,
    real_root_count,
    resultant,
    series_coefficient,
    series_reciprocal,
    squarefree_part,
)
from mldegree.exactmath.linalg import bareiss_det, integer_kernel, rational_det, saturated_basis
from mldegree.exactmath.unipoly import _gcd_modular, _gcd_prs, inverse_mod, remove_common_roots
from mldegree.formulas import plane_curve_ml_degree

x = UniPoly.x()


class TestSeries:
    def test_geometric_reciprocal(self):
        assert series_reciprocal(IntSeries.linear(2, 4)).coefficients == (1, 2, 4, 8, 16)

    def test_reciprocal_of_one(self):
        assert series_reciprocal(IntSeries([1], 3)).coefficients == (1, 0, 0, 0)

    def test_round_trip(self):
        s = IntSeries.linear(1, 6) ** 2
        assert (s * series_reciprocal(s)).coefficients == (1, 0, 0, 0, 0, 0, 0)

    def test_non_unit_constant_term(self):
        with pytest.raises(NonUnitConstantTerm):
            series_reciprocal(IntSeries([2, 1], 3))

    def test_minus_one_constant_term(self):
        s = IntSeries([-1, 3], 5)
        assert (s * series_reciprocal(s)).coefficients == (1, 0, 0, 0, 0, 0)

    @pytest.mark.parametrize("k,expected", [(2, 25), (3, 88), (4, 280)])
    def test_four_quadrics(self, k, expected):
        num = IntSeries.linear(1, 4) ** 2
        assert series_coefficient(num, [IntSeries.linear(2, 4)] * 4, k) == expected

    def test_ratio_one(self):
        assert series_coefficient(IntSeries.linear(1, 1), [IntSeries.linear(1, 1)], 1) == 0

    def test_insufficient_order(self):
        with pytest.raises(InsufficientOrder):
            series_coefficient(IntSeries.linear(1, 2), [IntSeries.linear(2, 2)], 3)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(1, 5), min_size=1, max_size=6))
    def test_plane_curve_identity(self, b):
        num = IntSeries.linear(1, 2) ** 2
        assert series_coefficient(num, [IntSeries.linear(v, 2) for v in b], 2) == plane_curve_ml_degree(b)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 8))
    def test_linear_specialization(self, d, n):
        num = IntSeries.linear(1, d) ** d
        assert series_coefficient(num, [IntSeries.linear(1, d)] * n, d) == comb(n - 1, d)


class TestUniPoly:
    def test_squarefree_examples(self):
        assert squarefree_part((x - 1) ** 2 * (x + 2)) == (x - 1) * (x + 2)
        assert squarefree_part(x ** 3) == x

    def test_squarefree_zero(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_part(UniPoly())

    def test_remove_common_roots(self):
        p = (x - 1) * (x - 2) * (x - 3)
        assert remove_common_roots(p, (x - 2) ** 3) == (x - 1) * (x - 3)

    def test_inverse_mod(self):
        m = x ** 3 - 2
        a = x + 1
        assert (a * inverse_mod(a, m)) % m == UniPoly([1])

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=5),
           st.lists(st.integers(-9, 9), min_size=1, max_size=5),
           st.lists(st.integers(-9, 9), min_size=1, max_size=4))
    def test_modular_gcd_matches_prs(self, a, b, g):
        g = UniPoly(g + [1])
        A, B = UniPoly(a + [1]) * g, UniPoly(b + [2]) * g
        ai, _ = A.integer_coefficients()
        bi, _ = B.integer_coefficients()
        assert UniPoly(_gcd_modular(ai, bi)).monic() == UniPoly(_gcd_prs(ai, bi)).monic()
        assert (A % poly_gcd(A, B)).is_zero()

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
    def test_squarefree_idempotent(self, c):
        p = UniPoly(c)
        if p.is_zero():
            return
        s = squarefree_part(p)
        assert squarefree_part(s) == s


class TestResultant:
    X, Y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)

    def test_linear(self):
        r = resultant(self.Y - self.X, self.Y - 1)
        assert r.monic() == x - 1

    def test_quadratic(self):
        r = resultant(self.Y ** 2 - self.X, self.Y - 2)
        assert r.monic() == x - 4

    def test_both_constant_in_y(self):
        with pytest.raises(DegenerateElimination):
            resultant(self.X + 1, self.X * 2)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
    def test_vanishes_at_common_root(self, a, b, c):
        # p and q share the point (a, b)
        p = (self.Y - b) * (self.Y + self.X * c + 1) + (self.X - a) * self.Y
        q = (self.Y - b) + (self.X - a) * (self.X + c)
        assert resultant(p, q)(Fraction(a)) == 0


class TestRoots:
    def test_sturm_counts(self):
        assert real_root_count(x ** 2 - 2) == 2
        assert real_root_count(x ** 2 + 1) == 0
        assert real_root_count(x ** 3 - x, (0, 2)) == 1

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree):
            real_root_count((x - 1) ** 2)

    def test_square_roots(self):
        tol = Fraction(1, 2 ** 40)
        roots, _ = complex_roots_numeric(x ** 2 - 1, tol=tol)
        assert [float(r.re) for r in roots] == pytest.approx([-1, 1])
        assert all(r.is_real and r.radius <= tol for r in roots)

    def test_cube_roots_of_unity(self):
        roots, _ = complex_roots_numeric(x ** 3 - 1)
        assert sum(r.is_real for r in roots) == 1
        for r in roots:
            assert abs(complex(r) ** 3 - 1) < 1e-12

    def test_disks_disjoint(self):
        p = UniPoly.from_roots([Fraction(k, 7) for k in range(-4, 5)])
        roots, _ = complex_roots_numeric(p)
        for i, a in enumerate(roots):
            for b in roots[i + 1:]:
                assert (a.re - b.re) ** 2 + (a.im - b.im) ** 2 > (a.radius + b.radius) ** 2

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-20, 20), min_size=2, max_size=7))
    def test_sturm_matches_certified_real_roots(self, c):
        p = UniPoly(c + [1])
        p = squarefree_part(p)
        if p.degree < 1:
            return
        roots, _ = complex_roots_numeric(p)
        assert len(roots) == p.degree
        assert sum(r.is_real for r in roots) == real_root_count(p)


class TestLinalg:
    def test_bareiss(self):
        assert bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == rational_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]])
        assert bareiss_det([[0, 1], [1, 0]]) == -1

    def test_integer_kernel(self):
        (v,) = integer_kernel([[1, 2, 3]], 3)[:1]
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
        assert len(integer_kernel([[1, 2, 3]], 3)) == 2

    def test_saturated_basis(self):
        basis = saturated_basis([[2, 4]], 2)
        assert basis == [[1, 2]] or basis == [[-1, -2]]


class TestRationalIO:
    def test_round_trip(self):
        assert parse_rational("-3/6") == Fraction(-1, 2)
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            parse_rational(0.5)
