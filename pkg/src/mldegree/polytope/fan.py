"""Inner normal fans and facet offsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional, Sequence

from mldegree.errors import FanNotRefining, NotFullDimensional
from mldegree.exactmath.linalg import minors_gcd, rank
from mldegree.polytope.core import LatticePolytope
from mldegree.polytope.hull import Point, dot, primitive


@dataclass(frozen=True)
class Fan:
    """Primitive rays and cones given as sorted tuples of ray indices.

    The zero cone is the empty tuple. ``faces`` optionally records, for a
    normal fan, the vertex set of the polytope face dual to each cone.
    """

    rays: tuple[Point, ...]
    cones: tuple[tuple[int, ...], ...]
    faces: Optional[dict] = None

    def __post_init__(self):
        for r in self.rays:
            if primitive(r) != tuple(r):
                raise ValueError(f"ray {r} is not primitive")

    @property
    def dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    def cone_dim(self, cone: Sequence[int]) -> int:
        if not cone:
            return 0
        return rank([self.rays[j] for j in cone])

    def maximal_cones(self) -> list[tuple[int, ...]]:
        cs = [set(c) for c in self.cones]
        return [c for c, s in zip(self.cones, cs) if not any(s < t for t in cs)]

    def smallest_cone(self, J: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Smallest cone containing the rays J, or None if no cone contains them all."""
        J = set(J)
        best = None
        for c in self.cones:
            if J <= set(c) and (best is None or len(c) < len(best)):
                best = c
        return best

    def is_simplicial(self, cone: Sequence[int]) -> bool:
        return self.cone_dim(cone) == len(cone)

    def is_smooth(self, cone: Sequence[int]) -> bool:
        """Unimodular: simplicial and the rays extend to a basis of Z^d."""
        if not cone:
            return True
        if not self.is_simplicial(cone):
            return False
        return minors_gcd([list(self.rays[j]) for j in cone]) == 1

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "cones": [list(c) for c in self.cones]}


def _angle_cmp(a: Point, b: Point) -> int:
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    cr = a[0] * b[1] - a[1] * b[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def normal_fan(P: LatticePolytope) -> Fan:
    """Inner normal fan; in the plane, rays run counterclockwise from angle 0."""
    if not P.is_full_dimensional:
        raise NotFullDimensional(f"normal fan needs a full-dimensional polytope (affine dim {P.affine_dim})")
    d = P.ambient_dim
    facets = list(P.facets)
    if d == 2:
        facets.sort(key=cmp_to_key(lambda f, g: _angle_cmp(f.normal, g.normal)))
    else:
        facets.sort(key=lambda f: f.normal, reverse=True)
    rays = tuple(f.normal for f in facets)
    verts = P.vertices
    incidence = [frozenset(i for i, v in enumerate(verts) if dot(f.normal, v) == f.rhs) for f in facets]
    faces = set(incidence)
    frontier = set(incidence)
    while frontier:
        new = set()
        for a in frontier:
            for b in incidence:
                c = a & b
                if c and c not in faces:
                    new.add(c)
        faces |= new
        frontier = new
    cone_faces = {(): tuple(verts)}
    for G in faces:
        cone = tuple(j for j, inc in enumerate(incidence) if G <= inc)
        cone_faces[cone] = tuple(verts[i] for i in sorted(G))
    cones = tuple(sorted(cone_faces, key=lambda c: (len(c), c)))
    return Fan(rays, cones, cone_faces)


@dataclass(frozen=True)
class FacetOffsets:
    """a[i][j] = -min over P_i of <x, eta_j>, so P_i = {x : <x, eta_j> >= -a_ij}."""

    a: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.a)


def _refines(P: LatticePolytope, fan: Fan) -> bool:
    for cone in fan.maximal_cones():
        common = None
        for j in cone:
            vals = [dot(fan.rays[j], v) for v in P.vertices]
            m = min(vals)
            argmin = {v for v, val in zip(P.vertices, vals) if val == m}
            common = argmin if common is None else common & argmin
        if common is not None and not common:
            return False
    return True


def facet_offsets(polys: Sequence[LatticePolytope], fan: Fan) -> FacetOffsets:
    rows = []
    for P in polys:
        if not _refines(P, fan):
            raise FanNotRefining(f"fan does not refine the normal fan of {P.vertices}")
        rows.append(tuple(-min(dot(r, v) for v in P.vertices) for r in fan.rays))
    return FacetOffsets(tuple(rows))


def reconstruct_vertices(a_row: Sequence[int], fan: Fan) -> set[Point]:
    """Vertices of {x : <x, eta_j> >= -a_j} (each maximal cone's tight point)."""
    from mldegree.exactmath.linalg import rref

    out = set()
    d = fan.dim
    for cone in fan.maximal_cones():
        rows = [list(fan.rays[j]) + [-a_row[j]] for j in cone]
        red, piv = rref(rows)
        if len(piv) == d and d not in piv:
            x = [0] * d
            for row, p in zip(red, piv):
                x[p] = row[d]
            if all(v.denominator == 1 for v in x):
                pt = tuple(int(v) for v in x)
                if all(dot(fan.rays[j], pt) >= -a_row[j] for j in range(len(fan.rays))):
                    out.add(pt)
    return out
