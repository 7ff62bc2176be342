"""Sparse multivariate (Laurent) polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from mldegree.exactmath.unipoly import UniPoly


class MultiPoly:
    """Map from exponent tuples to nonzero Fraction coefficients.

    Negative exponents are allowed (Laurent terms); operations that need an
    ordinary polynomial say so.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} has length != {nvars}")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                s = out.get(exps, 0) + c
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        self.terms: dict[tuple[int, ...], Fraction] = out

    @classmethod
    def var(cls, nvars: int, k: int) -> "MultiPoly":
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"MultiPoly({self.nvars}, {{{body}}})"

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        result, base = MultiPoly.const(self.nvars, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self, k: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                e2 = list(e)
                e2[k] -= 1
                out[tuple(e2)] = c * e[k]
        return MultiPoly(self.nvars, out)

    def __call__(self, *point):
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                t = t * x**k
            acc = acc + t
        return acc

    @property
    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, k: int) -> int:
        return max((e[k] for e in self.terms), default=-1)

    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[k] for e in self.terms) for k in range(self.nvars))

    def is_laurent(self) -> bool:
        return any(v < 0 for v in self.min_exponents())

    def shift(self, exps: Sequence[int]) -> "MultiPoly":
        """Multiply by the monomial theta^exps."""
        return MultiPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def cleared(self) -> "MultiPoly":
        """Ordinary polynomial obtained by dividing out the largest monomial factor."""
        m = self.min_exponents()
        return self.shift([-v for v in m])

    def substitute_linear(self, matrix: Sequence[Sequence[int]]) -> "MultiPoly":
        """Compose with theta = matrix @ z (ordinary polynomials only)."""
        if self.is_laurent():
            raise ValueError("linear substitution needs an ordinary polynomial")
        n = self.nvars
        images = []
        for row in matrix:
            terms = {}
            for k, a in enumerate(row):
                if a:
                    e = [0] * n
                    e[k] = 1
                    terms[tuple(e)] = a
            images.append(MultiPoly(n, terms))
        result = MultiPoly(n)
        powers: dict[tuple[int, int], MultiPoly] = {}
        for e, c in self.terms.items():
            t = MultiPoly.const(n, c)
            for k, ek in enumerate(e):
                if ek:
                    key = (k, ek)
                    if key not in powers:
                        powers[key] = images[k] ** ek
                    t = t * powers[key]
            result = result + t
        return result

    def as_univariate(self) -> UniPoly:
        if self.nvars != 1 or self.is_laurent():
            raise ValueError("not an ordinary univariate polynomial")
        deg = self.degree_in(0)
        coeffs = [0] * (deg + 1)
        for (k,), c in self.terms.items():
            coeffs[k] = c
        return UniPoly(coeffs)

    def coefficients_in_last(self) -> list[UniPoly]:
        """For a bivariate polynomial in (x, y): coefficients of y^k as UniPoly in x."""
        if self.nvars != 2 or self.is_laurent():
            raise ValueError("expects an ordinary bivariate polynomial")
        dy = self.degree_in(1)
        rows: list[dict[int, Fraction]] = [dict() for _ in range(dy + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for r in rows:
            deg = max(r, default=-1)
            out.append(UniPoly([r.get(i, 0) for i in range(deg + 1)]))
        return out

    @classmethod
    def from_coefficients_in_last(cls, coeffs: Sequence[UniPoly]) -> "MultiPoly":
        terms = {}
        for b, cx in enumerate(coeffs):
            for a, c in enumerate(cx.coeffs):
                if c:
                    terms[(a, b)] = c
        return cls(2, terms)

    @classmethod
    def from_univariate(cls, p: UniPoly) -> "MultiPoly":
        return cls(1, {(k,): c for k, c in enumerate(p.coeffs)})
