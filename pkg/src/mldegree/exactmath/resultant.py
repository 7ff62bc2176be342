"""Sylvester resultants and subresultants in y over Q[x].

Determinants are taken over Z by Bareiss elimination at integer sample
points x = 0, 1, ..., D and interpolated back to a polynomial in x, where D
is a degree bound read off the Sylvester rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from mldegree.errors import DegenerateElimination
from mldegree.exactmath.linalg import bareiss_det
from mldegree.exactmath.multipoly import MultiPoly
from mldegree.exactmath.unipoly import UniPoly, interpolate


def _as_y_coeffs(p) -> list[UniPoly]:
    """Normalize input to coefficients (in x) of y^0, y^1, ..."""
    if isinstance(p, MultiPoly):
        if p.nvars == 1:
            return [UniPoly([c]) for c in p.as_univariate().coeffs]
        return p.coefficients_in_last()
    if isinstance(p, UniPoly):
        return [UniPoly([c]) for c in p.coeffs]
    return [c if isinstance(c, UniPoly) else UniPoly([c]) for c in p]


def _trim(cs: list[UniPoly]) -> list[UniPoly]:
    cs = list(cs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _integerize(cs: list[UniPoly]) -> tuple[list[list[int]], int]:
    den = 1
    for c in cs:
        for v in c.coeffs:
            den = lcm(den, v.denominator)
    return [[int(v * den) for v in c.coeffs] for c in cs], den


def _eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _subresultant_rows(p_vals: list[int], q_vals: list[int], j: int) -> list[list[int]]:
    """Rows of the j-th subresultant matrix, highest power of y first."""
    m, n = len(p_vals) - 1, len(q_vals) - 1
    width = m + n - j
    rows = []
    for i in range(n - j):
        row = [0] * width
        for k, c in enumerate(p_vals):
            row[width - 1 - (k + (n - j - 1 - i))] = c
        rows.append(row)
    for i in range(m - j):
        row = [0] * width
        for k, c in enumerate(q_vals):
            row[width - 1 - (k + (m - j - 1 - i))] = c
        rows.append(row)
    return rows


def subresultant_coefficients(p, q, j: int) -> list[UniPoly]:
    """Coefficients s_{j,0..j}(x) of the j-th subresultant of p, q in y.

    ``s_{j,j}`` is the principal subresultant coefficient; j = 0 gives the
    resultant as the single entry.
    """
    pc, qc = _trim(_as_y_coeffs(p)), _trim(_as_y_coeffs(q))
    if not pc or not qc:
        raise DegenerateElimination("zero polynomial in elimination")
    m, n = len(pc) - 1, len(qc) - 1
    if m == 0 and n == 0:
        raise DegenerateElimination("both inputs have y-degree 0")
    if j > min(m, n) or j < 0:
        raise ValueError(f"subresultant index {j} out of range")
    p_int, p_den = _integerize(pc)
    q_int, q_den = _integerize(qc)
    dpx = max(len(c) for c in p_int) - 1
    dqx = max(len(c) for c in q_int) - 1
    bound = (n - j) * max(dpx, 0) + (m - j) * max(dqx, 0)
    xs = list(range(bound + 1))
    width = m + n - j
    samples: list[list[int]] = [[] for _ in range(j + 1)]
    for x in xs:
        pv = [_eval_int(c, x) for c in p_int]
        qv = [_eval_int(c, x) for c in q_int]
        rows = _subresultant_rows(pv, qv, j)
        fixed = m + n - 2 * j - 1
        for k in range(j + 1):
            col = width - 1 - k  # column of y^k
            sub = [row[:fixed] + [row[col]] for row in rows]
            samples[k].append(bareiss_det(sub))
    scale = Fraction(1, p_den ** (n - j) * q_den ** (m - j))
    return [interpolate(xs, ys) * scale for ys in samples]


def resultant(p, q) -> UniPoly:
    """Res_y(p, q) as a polynomial in x (a constant for univariate input)."""
    return subresultant_coefficients(p, q, 0)[0]


def subresultant(p, q, j: int) -> MultiPoly:
    """The j-th subresultant as a bivariate polynomial in (x, y)."""
    return MultiPoly.from_coefficients_in_last(subresultant_coefficients(p, q, j))
