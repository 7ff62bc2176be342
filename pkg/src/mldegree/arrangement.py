"""Affine hyperplane arrangements: intersection poset, Moebius function, region counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Optional, Sequence

from mldegree.errors import InfinitelyManyCriticalPoints, InputError, TooLarge
from mldegree.exactmath import format_rational, parse_rational
from mldegree.exactmath.linalg import rank, rational_det, rational_kernel, rref
from mldegree.exactmath.unipoly import UniPoly
from mldegree.lp import maximize_free

MAX_POSET_HYPERPLANES = 12
MAX_POSET_DIM = 4
MAX_BRUTE_HYPERPLANES = 10
MAX_BRUTE_DIM = 3


def _normalize(normal: Sequence[Fraction], offset: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    lead = next(v for v in normal if v != 0)
    return tuple(v / lead for v in normal), offset / lead


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes <a_i, theta> + c_i = 0 in Q^d."""

    d: int
    hyperplanes: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __init__(self, d: int, hyperplanes: Sequence[tuple[Sequence, object]]):
        hs = []
        seen = set()
        for normal, offset in hyperplanes:
            normal = tuple(parse_rational(v) for v in normal)
            offset = parse_rational(offset)
            if len(normal) != d:
                raise InputError(f"normal {normal} does not have length {d}")
            if all(v == 0 for v in normal):
                raise InputError("zero normal vector")
            key = _normalize(normal, offset)
            if key in seen:
                raise InputError(f"duplicate hyperplane {normal}, {offset}")
            seen.add(key)
            hs.append((normal, offset))
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "hyperplanes", tuple(hs))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def normals_rank(self) -> int:
        return rank([list(a) for a, _ in self.hyperplanes]) if self.hyperplanes else 0

    def is_essential(self) -> bool:
        return self.normals_rank() == self.d

    def cone(self) -> "Arrangement":
        """Homogenize: F_i = c_i theta_0 + <a_i, theta> in Q^(d+1)."""
        return Arrangement(self.d + 1, [((c,) + tuple(a), 0) for a, c in self.hyperplanes])

    def delete(self, i: int) -> "Arrangement":
        return Arrangement(self.d, [h for j, h in enumerate(self.hyperplanes) if j != i])

    def restrict(self, i: int) -> "Arrangement":
        """The arrangement induced on hyperplane i, in coordinates of that hyperplane."""
        a, c = self.hyperplanes[i]
        k = next(j for j, v in enumerate(a) if v != 0)
        point = [Fraction(0)] * self.d
        point[k] = -c / a[k]
        basis = rational_kernel([list(a)], self.d)
        out = []
        seen = set()
        for j, (b, e) in enumerate(self.hyperplanes):
            if j == i:
                continue
            normal = tuple(sum(bv * vv for bv, vv in zip(b, v)) for v in basis)
            offset = sum(bv * pv for bv, pv in zip(b, point)) + e
            if all(v == 0 for v in normal):
                continue  # parallel to hyperplane i: no trace on it
            key = _normalize(normal, offset)
            if key not in seen:
                seen.add(key)
                out.append((normal, offset))
        return Arrangement(self.d - 1, out)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "hyperplanes": [
                {"normal": [format_rational(v) for v in a], "offset": format_rational(c)}
                for a, c in self.hyperplanes
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Arrangement":
        try:
            d = int(obj["d"])
            hs = [(h["normal"], h.get("offset", "0")) for h in obj["hyperplanes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed arrangement JSON: {exc}") from exc
        return cls(d, hs)

    @classmethod
    def from_design(cls, design_points: Sequence[Sequence], exponents: Sequence[Sequence[int]]) -> "Arrangement":
        """Linear polynomial model: f_i(theta) = sum_j theta_j v_i^(a_j)."""
        rows = []
        for v in design_points:
            row = []
            for a in exponents:
                term = Fraction(1)
                for vk, ak in zip(v, a):
                    term *= parse_rational(vk) ** ak
                row.append(term)
            rows.append((row, 0))
        return cls(len(exponents), rows)


@dataclass(frozen=True)
class Flat:
    """Intersection of the hyperplanes in ``members`` (the full set containing it)."""

    members: frozenset
    dim: int
    point: tuple[Fraction, ...]
    directions: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class IntersectionPoset:
    d: int
    flats: tuple[Flat, ...]
    moebius: tuple[int, ...]

    def below(self, i: int) -> list[int]:
        """Flats strictly containing flat i (earlier in reverse-inclusion order)."""
        m = self.flats[i].members
        return [j for j, f in enumerate(self.flats) if f.members < m]


def _system(A: Arrangement, members) -> list[list[Fraction]]:
    return [list(A.hyperplanes[i][0]) + [-A.hyperplanes[i][1]] for i in sorted(members)]


def _flat_of(A: Arrangement, members) -> Optional[tuple[frozenset, int]]:
    rows = _system(A, members)
    if not rows:
        return frozenset(), A.d
    red, piv = rref(rows)
    if A.d in piv:
        return None
    r = len(piv)
    closure = set(members)
    for j in range(A.n):
        if j in closure:
            continue
        red2, piv2 = rref(red + [list(A.hyperplanes[j][0]) + [-A.hyperplanes[j][1]]])
        if len(piv2) == r:
            closure.add(j)
    return frozenset(closure), A.d - r


def _make_flat(A: Arrangement, members: frozenset, dim: int) -> Flat:
    point = [Fraction(0)] * A.d
    normals = [list(A.hyperplanes[i][0]) for i in sorted(members)]
    if members:
        red, piv = rref(_system(A, members))
        for row, c in zip(red, piv):
            point[c] = row[-1]
    directions = rational_kernel(normals, A.d) if normals else [
        [Fraction(int(i == j)) for j in range(A.d)] for i in range(A.d)]
    return Flat(members, dim, tuple(point), tuple(tuple(v) for v in directions))


def build_poset(A: Arrangement) -> IntersectionPoset:
    if A.n > MAX_POSET_HYPERPLANES or A.d > MAX_POSET_DIM:
        raise TooLarge(f"poset construction limited to {MAX_POSET_HYPERPLANES} hyperplanes, d <= {MAX_POSET_DIM}")
    flats = {frozenset(): A.d}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for S in frontier:
            for i in range(A.n):
                if i in S:
                    continue
                res = _flat_of(A, S | {i})
                if res is not None and res[0] not in flats:
                    flats[res[0]] = res[1]
                    nxt.append(res[0])
        frontier = nxt
    order = sorted(flats, key=lambda s: (-flats[s], len(s), sorted(s)))
    flat_list = tuple(_make_flat(A, s, flats[s]) for s in order)
    mu: list[int] = []
    for i, f in enumerate(flat_list):
        if not f.members:
            mu.append(1)
        else:
            mu.append(-sum(mu[j] for j in range(i) if flat_list[j].members < f.members))
    return IntersectionPoset(A.d, flat_list, tuple(mu))


def characteristic_polynomial(P: IntersectionPoset) -> UniPoly:
    coeffs = [0] * (P.d + 1)
    for f, m in zip(P.flats, P.moebius):
        coeffs[f.dim] += m
    return UniPoly(coeffs)


def bounded_regions(A: Arrangement) -> int:
    if not A.is_essential():
        return 0
    chi = characteristic_polynomial(build_poset(A))
    return int((-1) ** A.d * chi(Fraction(1)))


def total_regions(A: Arrangement) -> int:
    chi = characteristic_polynomial(build_poset(A))
    return int((-1) ** A.d * chi(Fraction(-1)))


def terao_degree(A: Arrangement) -> int:
    """Degree of the reciprocal variety read off the Hilbert polynomial of the coned arrangement."""
    C = A.cone()
    poset = build_poset(C)
    full = frozenset(range(C.n))
    top = [i for i, f in enumerate(poset.flats) if f.members == full]
    if not top or poset.flats[top[0]].dim > 0:
        # positive-dimensional central intersection: no bounded regions to count
        return 0
    d = A.d
    by_codim = [0] * (d + 2)
    for f, m in zip(poset.flats, poset.moebius):
        by_codim[C.d - f.dim] += m
    r = UniPoly.x()
    hilbert = UniPoly()
    for i in range(1, d + 2):
        binom = UniPoly([1])
        for k in range(1, i):
            binom = binom * (r - k)
        hilbert = hilbert + binom * Fraction((-1) ** i * by_codim[i], factorial(i - 1))
    lead = hilbert.coeffs[d] if hilbert.degree >= d else Fraction(0)
    value = lead * factorial(d)
    if value.denominator != 1:
        raise ArithmeticError(f"Hilbert polynomial leading term {lead} is not of the form e/d!")
    return int(value)


def _cell_nonempty(A: Arrangement, sigma: Sequence[int]) -> bool:
    d = A.d
    consts = [s * c for s, (_, c) in zip(sigma, A.hyperplanes)]
    s0 = min(min(consts, default=0), 0) - 1
    rows, rhs = [], []
    for s, (a, c) in zip(sigma, A.hyperplanes):
        rows.append([-s * v for v in a] + [1])
        rhs.append(s * c - s0)
    rows.append([0] * d + [1])
    rhs.append(1 - s0)
    best = maximize_free([0] * d + [1], rows, rhs)
    return best is not None and best + s0 > 0


def _cell_bounded(A: Arrangement, sigma: Sequence[int]) -> bool:
    d = A.d
    rows = [[-s * v for v in a] for s, (a, _) in zip(sigma, A.hyperplanes)]
    rhs = [0] * len(rows)
    for k in range(d):
        e = [0] * d
        e[k] = 1
        rows.append(list(e))
        rhs.append(1)
        rows.append([-v for v in e])
        rhs.append(1)
    for k in range(d):
        for sign in (1, -1):
            obj = [sign * int(j == k) for j in range(d)]
            best = maximize_free(obj, rows, rhs)
            if best is None or best > 0:
                return False
    return True


def enumerate_cells(A: Arrangement) -> list[tuple[tuple[int, ...], bool]]:
    """All realizable full sign vectors with a boundedness flag."""
    if A.n > MAX_BRUTE_HYPERPLANES or A.d > MAX_BRUTE_DIM:
        raise TooLarge(f"brute force limited to {MAX_BRUTE_HYPERPLANES} hyperplanes, d <= {MAX_BRUTE_DIM}")
    if A.d == 0:
        return [((), True)]
    cells = []
    for sigma in product((1, -1), repeat=A.n):
        if _cell_nonempty(A, sigma):
            cells.append((sigma, _cell_bounded(A, sigma)))
    return cells


def bounded_regions_bruteforce(A: Arrangement) -> int:
    return sum(1 for _, bounded in enumerate_cells(A) if bounded)


def total_regions_bruteforce(A: Arrangement) -> int:
    return len(enumerate_cells(A))


def is_generic(A: Arrangement) -> bool:
    """General position: any k <= d normals independent, any d+1 hyperplanes disjoint."""
    hs = A.hyperplanes
    for k in range(1, min(A.d, A.n) + 1):
        for S in combinations(range(A.n), k):
            if rank([list(hs[i][0]) for i in S]) < k:
                return False
    for S in combinations(range(A.n), A.d + 1):
        if rational_det([list(hs[i][0]) + [hs[i][1]] for i in S]) == 0:
            return False
    return True


@dataclass(frozen=True)
class LinearMLResult:
    ml_degree: int
    all_critical_points_real: bool
    verified_by_oracle: Optional[bool]
    note: str


def linear_ml_degree(A: Arrangement, u: Sequence[int], verify: bool = False, seed: int = 0) -> LinearMLResult:
    """ML degree of the linear model: the number of bounded regions.

    With ``verify`` (d <= 2 only) the count is rechecked by the critical-point
    oracle at u and at three random weight vectors.
    """
    u = [int(x) for x in u]
    if len(u) != A.n or any(x == 0 for x in u):
        raise InputError("need one nonzero integer weight per hyperplane")
    if not A.is_essential():
        raise InfinitelyManyCriticalPoints("normals span a proper subspace: infinitely many critical points")
    value = bounded_regions(A)
    verified = None
    note = "real critical points: one per bounded region (not certified beyond d <= 2)"
    if verify:
        from mldegree.oracle import verify_linear_model

        verified = verify_linear_model(A, u, value, seed=seed)
        if A.d <= 2:
            note = "oracle-checked count at the given and three random weight vectors"
    return LinearMLResult(value, True, verified, note)


def binomial_bound(d: int, n: int) -> int:
    return comb(n - 1, d)
