"""Truncated integer power series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from mldegree.errors import InsufficientOrder, NonUnitConstantTerm


@dataclass(frozen=True)
class IntSeries:
    """Power series c_0 + c_1 z + ... + c_N z^N known up to order N."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int], order: int | None = None):
        coeffs = [int(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if k > self.order:
            raise InsufficientOrder(f"coefficient {k} beyond truncation order {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "IntSeries":
        return IntSeries(self.coefficients, order)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [0] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return IntSeries(out, n)

    def __pow__(self, e: int) -> "IntSeries":
        result = IntSeries([1], self.order)
        for _ in range(e):
            result = result * self
        return result

    @classmethod
    def linear(cls, b: int, order: int) -> "IntSeries":
        """The series 1 - b z."""
        return cls([1, -b], order)


def series_reciprocal(s: IntSeries) -> IntSeries:
    """Inverse of `s` up to its truncation order (constant term must be +-1)."""
    c0 = s.coefficients[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z")
    n = s.order
    a = s.coefficients
    t = [0] * (n + 1)
    t[0] = c0
    for k in range(1, n + 1):
        acc = sum(a[i] * t[k - i] for i in range(1, k + 1))
        t[k] = -acc * c0
    return IntSeries(t, n)


def series_coefficient(num: IntSeries, den_factors: Sequence[IntSeries], k: int) -> int:
    """Return [z^k] num / prod(den_factors)."""
    orders = [num.order] + [f.order for f in den_factors]
    if k > min(orders):
        raise InsufficientOrder(f"need order >= {k}, have {min(orders)}")
    acc = num.truncate(k)
    for f in den_factors:
        acc = acc * series_reciprocal(f.truncate(k))
    return acc.coefficients[k]
