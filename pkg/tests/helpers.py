"""Random instance generators shared by the unit and acceptance suites."""

import random

from mldegree.arrangement import Arrangement, is_generic
from mldegree.polytope import convex_hull


def random_generic_arrangement(rng: random.Random, d: int, n: int, bound: int = 9) -> Arrangement:
    while True:
        hs = []
        for _ in range(n):
            a = [rng.randint(-bound, bound) for _ in range(d)]
            if not any(a):
                continue
            hs.append((a, rng.randint(-bound, bound)))
        if len(hs) != n:
            continue
        try:
            A = Arrangement(d, hs)
        except ValueError:
            continue
        if is_generic(A):
            return A


def random_polygon(rng: random.Random, lo: int, hi: int, k: int = 4):
    return convex_hull([(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(k)])
