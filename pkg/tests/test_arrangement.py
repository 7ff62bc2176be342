import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_generic_arrangement
from mldegree.arrangement import (
    Arrangement,
    binomial_bound,
    bounded_regions,
    bounded_regions_bruteforce,
    build_poset,
    characteristic_polynomial,
    enumerate_cells,
    is_generic,
    linear_ml_degree,
    terao_degree,
    total_regions,
    total_regions_bruteforce,
)
from mldegree.errors import InfinitelyManyCriticalPoints, InputError, TooLarge
from mldegree.exactmath import UniPoly

LINES4 = Arrangement(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], -1), ([1, -1], -2)])


class TestConstruction:
    def test_rejects_zero_normal(self):
        with pytest.raises(InputError):
            Arrangement(2, [([0, 0], 1)])

    def test_rejects_duplicates(self):
        with pytest.raises(InputError):
            Arrangement(2, [([1, 1], 1), ([2, 2], 2)])

    def test_json_round_trip(self):
        assert Arrangement.from_json(LINES4.to_json()) == LINES4

    def test_restrict(self):
        R = LINES4.restrict(0)
        assert R.d == 1 and R.n == 3

    def test_restrict_drops_parallels(self):
        A = Arrangement(2, [([1, 0], 0), ([1, 0], -1), ([0, 1], 0)])
        assert A.restrict(0).n == 1

    def test_from_design(self):
        A = Arrangement.from_design([[0], [1], [2]], [[0], [1]])
        assert A.n == 3 and A.d == 2 and A.is_essential()


class TestCounts:
    def test_crossing_lines_moebius(self):
        P = build_poset(Arrangement(2, [([1, 0], 0), ([0, 1], 0)]))
        assert sorted(P.moebius) == [-1, -1, 1, 1]
        assert characteristic_polynomial(P) == UniPoly([1, -2, 1])

    def test_four_lines(self):
        assert bounded_regions(LINES4) == 3
        assert total_regions(LINES4) == 11
        assert bounded_regions_bruteforce(LINES4) == 3
        assert total_regions_bruteforce(LINES4) == 11
        assert terao_degree(LINES4) == 3

    def test_concurrent_lines(self):
        A = Arrangement(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], 0)])
        assert bounded_regions(A) == 0
        assert total_regions(A) == 6
        assert bounded_regions_bruteforce(A) == 0

    def test_parallel_lines(self):
        A = Arrangement(2, [([1, 0], 0), ([1, 0], -1)])
        assert bounded_regions(A) == 0
        assert total_regions(A) == total_regions_bruteforce(A) == 3
        assert terao_degree(A) == 0
        with pytest.raises(InfinitelyManyCriticalPoints):
            linear_ml_degree(A, [1, 1])

    def test_limits(self):
        big = Arrangement(1, [([1], k) for k in range(13)])
        with pytest.raises(TooLarge):
            build_poset(big)
        with pytest.raises(TooLarge):
            enumerate_cells(Arrangement(1, [([1], k) for k in range(11)]))

    def test_planes_in_space(self):
        A = random_generic_arrangement(random.Random(11), 3, 6)
        assert bounded_regions(A) == bounded_regions_bruteforce(A) == comb(5, 3)
        assert total_regions(A) == total_regions_bruteforce(A) == 42
        assert terao_degree(A) == 10

    def test_generic_detection(self):
        assert is_generic(LINES4)
        assert not is_generic(Arrangement(2, [([1, 0], 0), ([0, 1], 0), ([1, 1], 0)]))

    def test_linear_ml_degree_verified(self):
        res = linear_ml_degree(LINES4, [1, 2, 3, 4], verify=True)
        assert res.ml_degree == 3 and res.verified_by_oracle
        assert binomial_bound(2, 4) == 3

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(1, 6))
    def test_deletion_restriction(self, seed, d, n):
        rng = random.Random(seed)
        hs = []
        while len(hs) < n:
            a = [rng.randint(-2, 2) for _ in range(d)]
            h = (a, rng.randint(-2, 2))
            if any(a):
                try:
                    Arrangement(d, hs + [h])
                except InputError:
                    continue
                hs.append(h)
        A = Arrangement(d, hs)
        i = rng.randrange(n)
        assert total_regions(A) == total_regions(A.delete(i)) + total_regions(A.restrict(i))
        if d <= 2:
            assert total_regions(A) == total_regions_bruteforce(A)
            assert bounded_regions(A) == bounded_regions_bruteforce(A)

    def test_terao_matches_bounded_for_generic(self):
        rng = random.Random(5)
        for _ in range(10):
            A = random_generic_arrangement(rng, 2, rng.randint(3, 6))
            assert terao_degree(A) == bounded_regions(A)
