"""Tiny exact simplex method (Bland's rule) over Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> Optional[Fraction]:
    """max c.x subject to A x <= b, x >= 0, with b >= 0 (origin feasible).

    Returns the optimum, or None when unbounded.
    """
    m, n = len(A), len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("origin must be feasible (b >= 0)")
    # tableau rows: [A | I | b]; objective row: [-c | 0 | 0]
    T = [[Fraction(v) for v in A[i]] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(b[i])]
         for i in range(m)]
    obj = [-Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    width = n + m
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            return obj[-1]
        best, leave = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return None
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * p for a, p in zip(T[i], T[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * p for a, p in zip(obj, T[leave])]
        basis[leave] = enter


def maximize_free(c: Sequence, A: Sequence[Sequence], b: Sequence) -> Optional[Fraction]:
    """max c.x subject to A x <= b with x free (split x = x+ - x-); needs b >= 0."""
    c2 = list(c) + [-v for v in c]
    A2 = [list(row) + [-v for v in row] for row in A]
    return maximize(c2, A2, b)
