"""Exact convex hulls of integer point sets in dimension <= 3."""

from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from mldegree.errors import UnsupportedDimension
from mldegree.exactmath.linalg import saturated_basis, solve_coordinates

Point = tuple[int, ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def primitive(v: Sequence[int]) -> Point:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def cross(a: Sequence[int], b: Sequence[int]) -> Point:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def affine_frame(points: Sequence[Point]) -> tuple[Point, list[list[int]], list[Point]]:
    """Lex-min origin, Z-basis of the affine span's lattice, integer coordinates."""
    origin = min(points)
    d = len(origin)
    basis = saturated_basis([sub(p, origin) for p in points], d)
    coords = []
    for p in points:
        c = solve_coordinates(basis, sub(p, origin)) if basis else []
        coords.append(tuple(int(x) for x in c))
    return origin, basis, coords


def from_frame(origin: Point, basis: list[list[int]], c: Sequence[int]) -> Point:
    out = list(origin)
    for coef, b in zip(c, basis):
        for i in range(len(out)):
            out[i] += coef * b[i]
    return tuple(out)


def hull_2d(points: Sequence[Point]) -> list[Point]:
    """Vertices counterclockwise from the lex-min point (collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _facets_3d_bruteforce(pts: list[Point]) -> set[tuple[Point, int]]:
    found = set()
    for a, b, c in combinations(pts, 3):
        n = cross(sub(b, a), sub(c, a))
        if n == (0, 0, 0):
            continue
        n = primitive(n)
        for cand in (n, tuple(-x for x in n)):
            rhs = dot(cand, a)
            if all(dot(cand, p) >= rhs for p in pts):
                found.add((cand, rhs))
    return found


def _facet_polygon(pts: list[Point], normal: Point, rhs: int) -> list[Point]:
    """Vertices of the facet {<normal, x> = rhs}, cyclically ordered."""
    on = [p for p in pts if dot(normal, p) == rhs]
    origin, basis, coords = affine_frame(on)
    ring = hull_2d(coords)
    # orient so that the order is counterclockwise seen from outside (normal points inward)
    verts = [from_frame(origin, basis, c) for c in ring]
    if len(verts) >= 3:
        n = cross(sub(verts[1], verts[0]), sub(verts[2], verts[0]))
        if dot(n, normal) > 0:
            verts = [verts[0]] + verts[:0:-1]
    return verts


def hull_3d(points: Sequence[Point]) -> tuple[list[Point], list[tuple[Point, int, list[Point]]]]:
    """Vertices (lex order) and facets (inner normal, rhs, polygon) of a 3D full-dim hull."""
    pts = sorted(set(points))
    candidates: set[tuple[Point, int]] = set()
    try:
        qh = ConvexHull(np.array(pts, dtype=float))
        for simplex in qh.simplices:
            a, b, c = (pts[i] for i in simplex)
            n = cross(sub(b, a), sub(c, a))
            if n == (0, 0, 0):
                continue
            n = primitive(n)
            for cand in (n, tuple(-x for x in n)):
                rhs = dot(cand, a)
                if all(dot(cand, p) >= rhs for p in pts):
                    candidates.add((cand, rhs))
    except QhullError:
        candidates = set()
    facets = [(n, rhs, _facet_polygon(pts, n, rhs)) for n, rhs in sorted(candidates)]
    if not _closed_surface(facets):
        facets = [(n, rhs, _facet_polygon(pts, n, rhs)) for n, rhs in sorted(_facets_3d_bruteforce(pts))]
        if not _closed_surface(facets):
            raise ArithmeticError("3D hull failed the closed-surface check")
    verts = sorted({v for _, _, poly in facets for v in poly})
    return verts, facets


def _closed_surface(facets) -> bool:
    if len(facets) < 4:
        return False
    edges: dict[frozenset, int] = {}
    for _, _, poly in facets:
        if len(poly) < 3:
            return False
        for i in range(len(poly)):
            e = frozenset((poly[i], poly[(i + 1) % len(poly)]))
            edges[e] = edges.get(e, 0) + 1
    return all(c == 2 for c in edges.values())


def hull_vertices(points: Sequence[Point]) -> tuple[list[Point], int]:
    """Irredundant vertices in canonical order, and the affine dimension."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    if d > 3:
        raise UnsupportedDimension(f"convex hull is implemented for d <= 3, got d = {d}")
    origin, basis, coords = affine_frame(pts)
    k = len(basis)
    if k == 0:
        return [pts[0]], 0
    if k == 1:
        lo, hi = min(coords), max(coords)
        return sorted([from_frame(origin, basis, lo), from_frame(origin, basis, hi)]), 1
    if k == 2:
        ring = hull_2d(coords)
        verts = [from_frame(origin, basis, c) for c in ring]
        if d == 2:
            verts = _ccw_from_lexmin(verts)
        else:
            verts = sorted(verts)
        return verts, 2
    verts, _ = hull_3d(pts)
    return verts, 3


def _ccw_from_lexmin(verts: list[Point]) -> list[Point]:
    # orientation of the frame may have flipped the ring
    area2 = 0
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        area2 += a[0] * b[1] - a[1] * b[0]
    if area2 < 0:
        verts = verts[::-1]
    i = verts.index(min(verts))
    return verts[i:] + verts[:i]
