"""Exact integer and rational linear algebra on small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix: clear denominators row-wise, then Bareiss."""
    scale = Fraction(1)
    rows = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        rows.append([int(v * den) for v in row])
        scale /= den
    return bareiss_det(rows) * scale


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[Fraction(v) for v in row] for row in matrix]
    if not m:
        return [], []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def rational_kernel(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right null space over Q."""
    if ncols is None:
        ncols = len(matrix[0])
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Z-basis of {x in Z^n : matrix x = 0} via unimodular column operations."""
    if ncols is None:
        ncols = len(matrix[0])
    a = [list(map(int, row)) for row in matrix]
    n = ncols
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns track operations
    rows = len(a)

    def col_op(src: int, dst: int, q: int) -> None:
        # column dst -= q * column src
        for r in range(rows):
            a[r][dst] -= q * a[r][src]
        for r in range(n):
            u[r][dst] -= q * u[r][src]

    def col_swap(i: int, j: int) -> None:
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    piv_col = 0
    for r in range(rows):
        if piv_col >= n:
            break
        while True:
            nz = [c for c in range(piv_col, n) if a[r][c] != 0]
            if not nz:
                break
            c_min = min(nz, key=lambda c: abs(a[r][c]))
            col_swap(piv_col, c_min)
            done = True
            for c in range(piv_col + 1, n):
                if a[r][c] != 0:
                    col_op(piv_col, c, a[r][c] // a[r][piv_col])
                    if a[r][c] != 0:
                        done = False
            if done:
                piv_col += 1
                break
    return [[u[i][c] for i in range(n)] for c in range(piv_col, n)]


def saturated_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """Z-basis of span_Q(vectors) intersected with Z^dim."""
    vecs = [list(map(int, v)) for v in vectors if any(v)]
    if not vecs:
        return []
    ortho = rational_kernel(vecs, dim)
    if not ortho:
        return [[int(i == j) for j in range(dim)] for i in range(dim)]
    int_rows = []
    for v in ortho:
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        int_rows.append([int(x * den) for x in v])
    return integer_kernel(int_rows, dim)


def solve_coordinates(basis: Sequence[Sequence[int]], v: Sequence) -> list[Fraction] | None:
    """Coordinates c with sum c_i basis_i = v, or None if v is outside the span."""
    k = len(basis)
    dim = len(v)
    aug = [[Fraction(basis[i][r]) for i in range(k)] + [Fraction(v[r])] for r in range(dim)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coords = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coords[p] = row[k]
    return coords


def minors_gcd(rows: Sequence[Sequence[int]]) -> int:
    """gcd of all maximal minors of a k x d integer matrix (k <= d)."""
    from itertools import combinations

    k = len(rows)
    d = len(rows[0]) if rows else 0
    g = 0
    for cols in combinations(range(d), k):
        g = gcd(g, bareiss_det([[row[c] for c in cols] for row in rows]))
        if g == 1:
            return 1
    return g
