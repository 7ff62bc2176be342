import random
from fractions import Fraction

import pytest

from mldegree.errors import DegenerateSystem, InputError, UnsupportedDimension
from mldegree.exactmath import MultiPoly
from mldegree.formulas import generic_ml_degree
from mldegree.oracle import (
    build_system,
    circle_ellipse_model,
    count_critical,
    count_critical_d1,
    count_critical_d2,
    independence_model,
    nested_ellipses,
    random_generic_model,
    semicontinuity_check,
    shear_counts,
)

X, Y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
T = MultiPoly.var(1, 0)


class TestBuildSystem:
    def test_rejects_bad_weights(self):
        with pytest.raises(InputError):
            build_system([X, Y], [1])
        with pytest.raises(InputError):
            build_system([X, Y], [1, 0])

    def test_rejects_three_variables(self):
        with pytest.raises(UnsupportedDimension):
            build_system([MultiPoly.var(3, 0)], [1])

    def test_vanishing_numerator(self):
        # x^1 * x^-1 is constant: the log-derivative is zero
        with pytest.raises(DegenerateSystem):
            build_system([X, X], [1, -1])

    def test_torus_adds_coordinate_divisors(self):
        sys = build_system([X + 1, Y + 1], [1, 1], torus=True)
        assert X in sys.divisors and Y in sys.divisors


class TestUnivariate:
    def test_single_linear_factor(self):
        assert count_critical_d1(build_system([T], [1])).complex_count == 0

    def test_generic_two_three(self):
        rng = random.Random(2)
        f = [MultiPoly(1, {(k,): Fraction(rng.randint(1, 50), 7) for k in range(b + 1)}) for b in (2, 3)]
        rep = count_critical_d1(build_system(f, [3, 5]))
        assert rep.complex_count == generic_ml_degree(1, [2, 3]) == 4
        assert (rep.complex_count - rep.real_count) % 2 == 0

    def test_shared_root_filtered(self):
        # t^2 and t^2 + 1: the root t = 0 of the numerator is on a divisor
        rep = count_critical(build_system([T * T, T * T + 1], [1, 1]))
        assert rep.complex_count == 2


class TestBivariate:
    def test_independence_model(self):
        u = [3, 5, 7, 11]
        rep = count_critical_d2(build_system(independence_model(), u))
        assert rep.complex_count == rep.real_count == 1
        (pt,) = rep.roots
        s = sum(u)
        assert abs(pt[0] - Fraction(u[0] + u[2], s)) < 1e-12
        assert abs(pt[1] - Fraction(u[0] + u[1], s)) < 1e-12

    @pytest.mark.parametrize("u,count,real", [
        ((1, 2, 3, 5), 9, 7),
        ((1, 2, -1, -2), 7, 1),
        ((2, 4, -1, -2), 5, 3),
        ((3, -3, 5, -5), 3, 1),
    ])
    def test_circle_ellipse_quartet(self, u, count, real):
        rep = count_critical_d2(build_system(circle_ellipse_model(), u))
        assert (rep.complex_count, rep.real_count) == (count, real)

    def test_nested_ellipses_all_real(self):
        rep = count_critical_d2(build_system(nested_ellipses(), [3, 5]))
        assert rep.complex_count == rep.real_count == 5

    def test_points_satisfy_equations(self):
        sys = build_system(circle_ellipse_model(), [1, 2, 3, 5])
        rep = count_critical_d2(sys)
        assert len(rep.roots) == rep.complex_count
        for x, y in rep.roots:
            for g in sys.g:
                val = sum(complex(c) * x ** e[0] * y ** e[1] for e, c in g.terms.items())
                assert abs(val) < 1e-6

    def test_json_report(self):
        rep = count_critical_d2(build_system(independence_model(), [1, 1, 1, 1]))
        out = rep.to_json()
        assert out["complex_count"] == 1 and out["certified"] is True
        assert set(out) >= {"real_count", "precision_bits", "residual_bound", "roots", "shear"}

    def test_shear_invariance(self):
        rng = random.Random(4)
        f, u = random_generic_model(rng, 2, [2, 1, 1])
        counts = shear_counts(build_system(f, u), [1, 2, 3])
        assert counts == [generic_ml_degree(2, [2, 1, 1])] * 3

    def test_random_generic_models(self):
        rng = random.Random(9)
        for degrees in ([1, 1, 1], [2, 1], [2, 2]):
            f, u = random_generic_model(rng, 2, degrees)
            rep = count_critical_d2(build_system(f, u), certify_points=False)
            assert rep.complex_count == generic_ml_degree(2, degrees)

    def test_semicontinuity_repeated_factor(self):
        # (x + y - 1) appears twice: a special member of the (1,1,1,2) family
        L = X + Y - 1
        model = [X, Y, L, L * L + X]
        verdict = semicontinuity_check(generic_ml_degree(2, [1, 1, 1, 2]), model, [2, 3, 5, 7])
        assert verdict.passed

    def test_deterministic(self):
        sys = build_system(circle_ellipse_model(), [1, 2, 3, 5])
        a = count_critical_d2(sys, seed=17).to_json()
        b = count_critical_d2(sys, seed=17).to_json()
        assert a == b
