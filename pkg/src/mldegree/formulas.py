"""Closed-form ML degree formulas: dense generating function, toric mixed volumes, plane curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Optional, Sequence, Union

from mldegree.errors import (
    CodimensionDeficit,
    InputError,
    NotFullDimensional,
    OriginOnEdgeLine,
    SmoothnessHypothesisViolated,
    UnsupportedDimension,
)
from mldegree.exactmath.linalg import integer_kernel
from mldegree.exactmath.series import IntSeries, series_coefficient
from mldegree.polytope import (
    Fan,
    FacetOffsets,
    LatticePolytope,
    face,
    facet_offsets,
    lattice_volume,
    minkowski_sum_all,
    mixed_volume,
    normal_fan,
)

GENERIC = "generic"


@dataclass(frozen=True)
class DenseModelSpec:
    d: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise InputError("d must be at least 1")
        if not self.degrees or any(b < 1 for b in self.degrees):
            raise InputError("degrees must be a nonempty list of positive integers")
        object.__setattr__(self, "degrees", tuple(int(b) for b in self.degrees))


def generic_series(d: int, degrees: Sequence[int], order: int) -> list[int]:
    """Coefficients 0..order of (1 - z)^d / prod(1 - b_i z)."""
    num = IntSeries.linear(1, order) ** d
    den = [IntSeries.linear(b, order) for b in degrees]
    return [series_coefficient(num, den, k) for k in range(order + 1)]


def generic_ml_degree(spec: Union[DenseModelSpec, int], degrees: Optional[Sequence[int]] = None) -> int:
    """Coefficient of z^d in (1 - z)^d / prod(1 - b_i z)."""
    if not isinstance(spec, DenseModelSpec):
        spec = DenseModelSpec(int(spec), tuple(degrees or ()))
    d = spec.d
    num = IntSeries.linear(1, d) ** d
    return series_coefficient(num, [IntSeries.linear(b, d) for b in spec.degrees], d)


def plane_curve_ml_degree(b: Sequence[int]) -> int:
    if any(x < 1 for x in b):
        raise InputError("curve degrees must be positive")
    pairs = sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))
    return sum(x * (x - 2) for x in b) + pairs + 1


def rectangle_ml_degree(s: Sequence[int], t: Sequence[int]) -> int:
    if len(s) != len(t) or not s:
        raise InputError("s and t must be nonempty lists of equal length")
    if any(x < 1 for x in list(s) + list(t)):
        raise InputError("rectangle side lengths must be positive")
    return sum(s) * sum(t) + sum(a * b for a, b in zip(s, t)) - sum(a + b for a, b in zip(s, t)) + 1


def viro_bound(b: Sequence[int]) -> int:
    """Upper bound on bounded regions cut out by real plane curves of degrees b."""
    if any(x < 1 for x in b):
        raise InputError("curve degrees must be positive")
    odd = sum(1 for x in b if x % 2)
    pairs = sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))
    return sum((x - 1) * (x - 2) // 2 for x in b) + pairs + 1 - odd


def linear_generic_ml_degree(d: int, n: int) -> int:
    """Bounded regions of n generic affine hyperplanes in R^d."""
    return comb(n - 1, d)


@dataclass(frozen=True)
class ToricModelSpec:
    polytopes: tuple[LatticePolytope, ...]
    weights: Union[str, tuple[int, ...]] = GENERIC

    def __post_init__(self):
        if not self.polytopes:
            raise InputError("toric model needs at least one polytope")
        d = self.polytopes[0].ambient_dim
        if any(P.ambient_dim != d for P in self.polytopes):
            raise InputError("polytopes of different ambient dimensions")
        if self.weights != GENERIC:
            w = tuple(int(u) for u in self.weights)
            if len(w) != len(self.polytopes):
                raise InputError("one weight per polytope required")
            if any(u == 0 for u in w):
                raise InputError("weights must be nonzero")
            object.__setattr__(self, "weights", w)
        object.__setattr__(self, "polytopes", tuple(self.polytopes))

    @property
    def d(self) -> int:
        return self.polytopes[0].ambient_dim

    @property
    def n(self) -> int:
        return len(self.polytopes)


@dataclass(frozen=True)
class SupportData:
    fan: Fan
    offsets: FacetOffsets
    support: frozenset
    nonsupport: tuple[int, ...]


@dataclass(frozen=True)
class Term:
    """One block of the alternating sum: sign * sum of mixed volumes over index multisets."""

    codim: int
    rays: tuple[int, ...]
    cone: tuple[int, ...]
    value: Fraction
    label: str

    @property
    def signed(self) -> Fraction:
        return (-1) ** self.codim * self.value


@dataclass
class ToricResult:
    value: int
    support: SupportData
    terms: list[Term]
    exact: bool
    notes: list[str] = field(default_factory=list)

    def explain(self) -> list[tuple[str, Fraction]]:
        """Term-by-term decomposition; in the plane the top block is split into areas."""
        out = []
        for t in self.terms:
            if t.codim == 0 and t.label.startswith("area"):
                out.append((t.label, t.value))
            else:
                out.append((t.label, t.signed))
        return out


def support_data(spec: ToricModelSpec) -> SupportData:
    P = minkowski_sum_all(spec.polytopes)
    if not P.is_full_dimensional:
        raise NotFullDimensional("the Minkowski sum of the Newton polytopes is not full-dimensional")
    fan = normal_fan(P)
    offsets = facet_offsets(spec.polytopes, fan)
    support = set()
    for j in range(len(fan.rays)):
        col = offsets.column(j)
        if spec.weights == GENERIC:
            if any(col):
                support.add(j)
        elif sum(u * a for u, a in zip(spec.weights, col)) != 0:
            support.add(j)
    nonsupport = tuple(j for j in range(len(fan.rays)) if j not in support)
    return SupportData(fan, offsets, frozenset(support), nonsupport)


def _ray_label(fan: Fan, J: Sequence[int]) -> str:
    return ",".join(f"x{j + 1}" for j in J)


def toric_ml_degree(spec: ToricModelSpec) -> ToricResult:
    """Alternating sum of mixed volumes over faces dual to cones of non-support rays."""
    d = spec.d
    if d > 3:
        raise UnsupportedDimension("toric formula needs hull and volume machinery, available for d <= 3")
    data = support_data(spec)
    fan = data.fan
    N = set(data.nonsupport)
    for cone in fan.cones:
        if len(cone) >= 2 and set(cone) <= N and not fan.is_smooth(cone):
            raise SmoothnessHypothesisViolated(
                f"singular cone {[fan.rays[j] for j in cone]} has no ray in the divisor support", cone)

    terms: list[Term] = []
    for c in range(d + 1):
        k = d - c
        for J in combinations(data.nonsupport, c):
            tau = fan.smallest_cone(J) if J else ()
            if tau is None:
                continue  # rays in no common cone: the term vanishes
            if not fan.is_smooth(tau):
                raise SmoothnessHypothesisViolated(
                    f"cone {[fan.rays[j] for j in tau]} spanned by non-support rays {J} is singular", tau)
            codim_tau = d - fan.cone_dim(tau)
            if codim_tau > k:
                continue
            if codim_tau < k:
                raise CodimensionDeficit(f"cone {tau} has codimension {codim_tau} < {k}")
            value = _block_value(spec, fan, tau, k)
            terms.append(Term(c, tuple(J), tau, value, _label(c, J, fan)))

    total = sum((t.signed for t in terms), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"alternating sum {total} is not an integer")
    exact = True
    notes = []
    if spec.weights != GENERIC:
        for j in range(len(fan.rays)):
            if j not in data.support and any(data.offsets.column(j)):
                exact = False
        if not exact:
            notes.append("weights cancel on a ray with nonzero offsets: value is an upper bound")
    if d == 2:
        terms = _split_top_block_2d(spec, terms)
    return ToricResult(int(total), data, terms, exact, notes)


def _label(c: int, J, fan: Fan) -> str:
    if c == 0:
        return "sum V(P_i1..P_id)"
    return f"V(..; tau[{_ray_label(fan, J)}])"


def _block_value(spec: ToricModelSpec, fan: Fan, tau: tuple[int, ...], k: int) -> Fraction:
    d = spec.d
    if tau:
        v = tuple(sum(fan.rays[j][i] for j in tau) for i in range(d))
        basis = integer_kernel([list(fan.rays[j]) for j in tau], d)
    else:
        v = (0,) * d
        basis = [[int(i == j) for j in range(d)] for i in range(d)]
    faces = [face(P, v) for P in spec.polytopes]
    total = Fraction(0)
    for idx in combinations_with_replacement(range(spec.n), k):
        total += mixed_volume([faces[i] for i in idx], basis)
    return total


def _split_top_block_2d(spec: ToricModelSpec, terms: list[Term]) -> list[Term]:
    # sum_{i<=j} V(P_i, P_j) = area(P) + sum area(P_i) in the plane
    out = []
    for t in terms:
        if t.codim != 0:
            out.append(t)
            continue
        areas = [lattice_volume(P) if P.affine_dim == 2 else Fraction(0) for P in spec.polytopes]
        total_area = lattice_volume(minkowski_sum_all(spec.polytopes))
        if sum(areas) + total_area != t.value:
            raise ArithmeticError("area decomposition does not match the mixed-volume block")
        for i, a in enumerate(areas):
            out.append(Term(0, (), (), a, f"area(P_{i + 1})"))
        out.append(Term(0, (), (), total_area, "area(P)"))
    return out


def toric_ml_degree_2d_fastpath(spec: ToricModelSpec) -> int:
    """Area of the Minkowski sum plus the areas of the summands."""
    if spec.d != 2:
        raise UnsupportedDimension("the area formula is planar")
    P = minkowski_sum_all(spec.polytopes)
    if not P.is_full_dimensional:
        raise NotFullDimensional("Minkowski sum is not full-dimensional")
    for f in P.facets:
        if f.rhs == 0:
            raise OriginOnEdgeLine(f"edge with inner normal {f.normal} lies on a line through the origin")
    total = lattice_volume(P) + sum(
        (lattice_volume(Q) if Q.affine_dim == 2 else Fraction(0)) for Q in spec.polytopes)
    if total.denominator != 1:
        raise ArithmeticError(f"area sum {total} is not an integer")
    return int(total)


def standard_simplex(d: int, b: int = 1) -> LatticePolytope:
    from mldegree.polytope import convex_hull

    pts = [(0,) * d] + [tuple(b * int(i == j) for j in range(d)) for i in range(d)]
    return convex_hull(pts)


def rectangle(s: int, t: int) -> LatticePolytope:
    from mldegree.polytope import convex_hull

    return convex_hull([(0, 0), (s, 0), (0, t), (s, t)])
