"""Lattice polytopes: construction, Minkowski sums, faces, volumes, mixed volumes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Optional, Sequence

from mldegree.errors import (
    DimensionMismatch,
    InputError,
    NotFullDimensional,
    SubspaceMismatch,
    UnsupportedDimension,
)
from mldegree.exactmath.linalg import bareiss_det, rank, saturated_basis, solve_coordinates
from mldegree.polytope.hull import (
    Point,
    add,
    affine_frame,
    dot,
    hull_2d,
    hull_3d,
    hull_vertices,
    primitive,
    sub,
)


@dataclass(frozen=True)
class Facet:
    """Inequality <normal, x> >= rhs with primitive inner normal; a_ij = -rhs."""

    normal: Point
    rhs: int


@dataclass(frozen=True)
class LatticePolytope:
    ambient_dim: int
    vertices: tuple[Point, ...]
    affine_dim: int
    _facets: Optional[tuple[Facet, ...]] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        return convex_hull(points)

    @classmethod
    def from_h_representation(
        cls, vertices: Sequence[Sequence[int]], inequalities: Sequence[tuple[Sequence[int], int]]
    ) -> "LatticePolytope":
        """Any-dimension polytope from a user-given V- and H-description, validated.

        ``inequalities`` are pairs (normal, rhs) meaning <normal, x> >= rhs.
        """
        verts = sorted({tuple(int(x) for x in v) for v in vertices})
        if not verts:
            raise InputError("empty vertex list")
        d = len(verts[0])
        facets = []
        for normal, rhs in inequalities:
            normal = tuple(int(x) for x in normal)
            if len(normal) != d:
                raise DimensionMismatch("inequality of wrong dimension")
            g = primitive(normal)
            if not any(g):
                raise InputError("zero inequality normal")
            s = next(n // p for n, p in zip(normal, g) if p)
            r = Fraction(int(rhs), s)
            if r.denominator != 1:
                raise InputError(f"inequality {normal} >= {rhs} has no lattice points on its boundary")
            facets.append(Facet(g, int(r)))
        for f in facets:
            if any(dot(f.normal, v) < f.rhs for v in verts):
                raise InputError(f"vertex violates inequality {f}")
            tight = [v for v in verts if dot(f.normal, v) == f.rhs]
            if rank([sub(v, tight[0]) for v in tight[1:]] or [[0] * d]) != d - 1:
                raise InputError(f"inequality {f} does not define a facet")
        for v in verts:
            tight = [f.normal for f in facets if dot(f.normal, v) == f.rhs]
            if rank(tight or [[0] * d]) != d:
                raise InputError(f"{v} is not a vertex of the described polytope")
        if rank([sub(v, verts[0]) for v in verts[1:]] or [[0] * d]) != d:
            raise InputError("H-representation input must be full-dimensional")
        return cls(d, tuple(verts), d, tuple(sorted(set(facets), key=lambda f: (f.normal, f.rhs))))

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @property
    def facets(self) -> tuple[Facet, ...]:
        if self._facets is None:
            object.__setattr__(self, "_facets", tuple(_compute_facets(self)))
        return self._facets

    def translate(self, q: Sequence[int]) -> "LatticePolytope":
        q = tuple(int(x) for x in q)
        verts = tuple(add(v, q) for v in self.vertices)
        facets = None
        if self._facets is not None:
            facets = tuple(Facet(f.normal, f.rhs + dot(f.normal, q)) for f in self._facets)
        return LatticePolytope(self.ambient_dim, verts, self.affine_dim, facets)

    def scale(self, k: int) -> "LatticePolytope":
        if k < 0:
            raise ValueError("negative dilation")
        if k == 0:
            return convex_hull([(0,) * self.ambient_dim])
        return LatticePolytope(self.ambient_dim, tuple(tuple(k * x for x in v) for v in self.vertices),
                               self.affine_dim)

    def contains(self, x: Sequence[int]) -> bool:
        if not self.is_full_dimensional:
            raise NotFullDimensional("containment test needs a full-dimensional polytope")
        return all(dot(f.normal, x) >= f.rhs for f in self.facets)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, obj: dict) -> "LatticePolytope":
        try:
            pts = obj["vertices"]
        except (KeyError, TypeError) as exc:
            raise InputError("polytope JSON needs a 'vertices' list") from exc
        if not pts:
            raise InputError("polytope has no vertices")
        return convex_hull(pts)


def convex_hull(points: Sequence[Sequence[int]]) -> LatticePolytope:
    """Irredundant vertices of conv(points), canonical order, affine dim recorded."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise InputError("convex hull of an empty point set")
    d = len(pts[0])
    if d > 3:
        raise UnsupportedDimension(f"convex hull is implemented for d <= 3 (got {d}); "
                                   "use LatticePolytope.from_h_representation")
    verts, k = hull_vertices(pts)
    return LatticePolytope(d, tuple(verts), k)


def _compute_facets(P: LatticePolytope) -> list[Facet]:
    if not P.is_full_dimensional:
        raise NotFullDimensional("facets are defined here for full-dimensional polytopes only")
    d = P.ambient_dim
    verts = list(P.vertices)
    if d == 1:
        return [Facet((1,), verts[0][0]), Facet((-1,), -verts[-1][0])]
    if d == 2:
        out = []
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            e = sub(b, a)
            n = primitive((-e[1], e[0]))  # inner normal of a counterclockwise edge
            out.append(Facet(n, dot(n, a)))
        return out
    if d == 3:
        _, facets = hull_3d(verts)
        return [Facet(n, rhs) for n, rhs, _ in facets]
    raise UnsupportedDimension("facets for d > 3 must come from an H-representation")


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {P.ambient_dim} != {Q.ambient_dim}")
    return convex_hull([add(p, q) for p in P.vertices for q in Q.vertices])


def minkowski_sum_all(polys: Sequence[LatticePolytope], d: Optional[int] = None) -> LatticePolytope:
    if not polys:
        if d is None:
            raise InputError("empty Minkowski sum needs an ambient dimension")
        return convex_hull([(0,) * d])
    out = polys[0]
    for P in polys[1:]:
        out = minkowski_sum(out, P)
    return out


def face(P: LatticePolytope, v: Sequence[int]) -> LatticePolytope:
    """The face of P on which <v, .> is minimal (v = 0 gives P)."""
    if len(v) != P.ambient_dim:
        raise DimensionMismatch("functional and polytope dimensions differ")
    values = [dot(v, x) for x in P.vertices]
    m = min(values)
    return convex_hull([x for x, val in zip(P.vertices, values) if val == m])


def _volume_in_coords(coords: Sequence[Point], k: int) -> Fraction:
    """Euclidean k-volume of conv(coords) in Z^k (0 if lower-dimensional)."""
    pts = sorted(set(coords))
    if k == 0:
        return Fraction(1)
    if len(pts) <= k:
        return Fraction(0)
    base = pts[0]
    if rank([sub(p, base) for p in pts[1:]]) < k:
        return Fraction(0)
    if k == 1:
        return Fraction(max(p[0] for p in pts) - min(p[0] for p in pts))
    if k == 2:
        ring = hull_2d(pts)
        area2 = 0
        for i in range(len(ring)):
            a, b = ring[i], ring[(i + 1) % len(ring)]
            area2 += a[0] * b[1] - a[1] * b[0]
        return Fraction(abs(area2), 2)
    if k == 3:
        verts, facets = hull_3d(pts)
        apex = verts[0]
        total = 0
        for _, _, poly in facets:
            for i in range(1, len(poly) - 1):
                m = [sub(poly[0], apex), sub(poly[i], apex), sub(poly[i + 1], apex)]
                total += abs(bareiss_det(m))
        return Fraction(total, 6)
    raise UnsupportedDimension(f"volumes are implemented for dimension <= 3, got {k}")


def lattice_volume(P: LatticePolytope) -> Fraction:
    """Volume relative to the lattice of P's affine span; points have volume 0."""
    if P.affine_dim == 0:
        return Fraction(0)
    if P.affine_dim > 3:
        raise UnsupportedDimension("volume beyond dimension 3 is not supported")
    _, _, coords = affine_frame(list(P.vertices))
    return _volume_in_coords(coords, P.affine_dim)


def mixed_volume(polys: Sequence[LatticePolytope], basis: Optional[Sequence[Sequence[int]]] = None) -> Fraction:
    """Normalized mixed volume of k polytopes in a rank-k lattice.

    Each polytope is translated by its lex-min vertex. The lattice is ``basis``
    when given (a Z-basis of L intersected with Z^d), otherwise the saturated
    lattice spanned by all the translated polytopes. V(P, ..., P) = k! vol(P),
    so a unimodular simplex has mixed volume 1.
    """
    k = len(polys)
    if k == 0:
        return Fraction(1)
    d = polys[0].ambient_dim
    if any(P.ambient_dim != d for P in polys):
        raise DimensionMismatch("polytopes of different ambient dimensions")
    shifted = [[sub(v, min(P.vertices)) for v in P.vertices] for P in polys]
    if basis is None:
        basis = saturated_basis([v for vs in shifted for v in vs], d)
        if len(basis) > k:
            raise SubspaceMismatch(
                f"{k} polytopes span a rank-{len(basis)} lattice; translates do not fit rank {k}")
        if len(basis) < k:
            return Fraction(0)
    basis = [list(b) for b in basis]
    if len(basis) != k:
        raise SubspaceMismatch(f"lattice rank {len(basis)} != number of polytopes {k}")
    coord_sets = []
    for vs in shifted:
        cs = []
        for v in vs:
            c = solve_coordinates(basis, v)
            if c is None or any(x.denominator != 1 for x in c):
                raise SubspaceMismatch(f"{v} does not lie in the given lattice")
            cs.append(tuple(int(x) for x in c))
        coord_sets.append(cs)
    total = Fraction(0)
    for size in range(1, k + 1):
        sign = (-1) ** (k - size)
        for S in combinations(range(k), size):
            pts = [(0,) * k]
            for i in S:
                pts = _reduced_sum(pts, coord_sets[i], k)
            total += sign * _volume_in_coords(pts, k)
    return total


def _reduced_sum(A: list[Point], B: list[Point], k: int) -> list[Point]:
    pts = {add(a, b) for a in A for b in B}
    if k <= 3 and len(pts) > 2 * (k + 1):
        pts_l = sorted(pts)
        base = pts_l[0]
        if rank([sub(p, base) for p in pts_l[1:]]) == k:
            if k == 2:
                return hull_2d(pts_l)
            if k == 3:
                return hull_3d(pts_l)[0]
    return sorted(pts)


def normalized_volume(P: LatticePolytope) -> Fraction:
    """k! times the lattice volume, k the affine dimension."""
    return lattice_volume(P) * factorial(P.affine_dim)
