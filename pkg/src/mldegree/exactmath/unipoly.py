"""Dense univariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from mldegree.errors import ZeroPolynomial


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Immutable polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", s))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, s in terms[1:]:
            out += f" {sign} {s}"
        return out

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        # multiply over Z with one common denominator per factor
        da = lcm(*(c.denominator for c in self.coeffs))
        db = lcm(*(c.denominator for c in other.coeffs))
        a = [c.numerator * (da // c.denominator) for c in self.coeffs]
        b = [c.numerator * (db // c.denominator) for c in other.coeffs]
        den = da * db
        return UniPoly([Fraction(v, den) for v in int_poly_mul(a, b)])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= c * oc
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly([c * inv for c in self.coeffs])

    def integer_coefficients(self) -> tuple[list[int], int]:
        """Primitive integer coefficient list and the scale used: self = ints / scale."""
        if self.is_zero():
            return [], 1
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints], Fraction(den, g)

    def primitive(self) -> "UniPoly":
        ints, _ = self.integer_coefficients()
        return UniPoly(ints)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self.coeffs))


def int_poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _pseudo_rem_int(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (lowest degree first)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lb * r for r in rem]
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _primitive_int(a: list[int]) -> list[int]:
    g = gcd(*a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in bases:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _prime(i: int) -> int:
    """The i-th prime below 2^62, counting downward."""
    while len(_PRIMES) <= i:
        n = (_PRIMES[-1] if _PRIMES else 1 << 62) - 1
        while not _is_prime(n):
            n -= 1
        _PRIMES.append(n)
    return _PRIMES[i]


def _trim_int(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_gcd_mod(a: list[int], b: list[int], prime: int) -> list[int]:
    a = _trim_int([v % prime for v in a])
    b = _trim_int([v % prime for v in b])
    while b:
        inv = pow(b[-1], -1, prime)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv % prime
            shift = len(a) - 1 - db
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % prime
            _trim_int(a)
        a, b = b, a
    inv = pow(a[-1], -1, prime)
    return [v * inv % prime for v in a]


def _divides_int(g: list[int], a: list[int]) -> bool:
    """Whether g divides a in Z[x] (g primitive)."""
    rem = list(a)
    dg, lg = len(g) - 1, g[-1]
    while len(rem) - 1 >= dg and rem:
        q, r = divmod(rem[-1], lg)
        if r:
            return False
        shift = len(rem) - 1 - dg
        for i, gc in enumerate(g):
            rem[shift + i] -= q * gc
        _trim_int(rem)
    return not rem


def _gcd_modular(a: list[int], b: list[int]) -> list[int]:
    """gcd of primitive integer polynomials by Chinese remaindering of modular images."""
    scale = gcd(a[-1], b[-1])
    best_deg = min(len(a), len(b))
    acc: list[int] = []
    modulus = 1
    i = 0
    while True:
        prime = _prime(i)
        i += 1
        if a[-1] % prime == 0 or b[-1] % prime == 0:
            continue
        img = [v * scale % prime for v in _monic_gcd_mod(a, b, prime)]
        deg = len(img) - 1
        if deg == 0:
            return [1]
        if deg > best_deg:
            continue  # unlucky prime
        if deg < best_deg:
            best_deg, acc, modulus = deg, img, prime
        else:
            inv = pow(modulus, -1, prime)
            acc = [x + modulus * ((y - x) * inv % prime) for x, y in zip(acc, img)]
            modulus *= prime
        half = modulus // 2
        cand = _primitive_int([v - modulus if v > half else v for v in acc])
        if _divides_int(cand, a) and _divides_int(cand, b):
            return cand


def _gcd_prs(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem_int(a, b)
        a, b = b, _primitive_int(r)
    return a


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q; gcd(0, 0) = 0."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a, _ = p.integer_coefficients()
    b, _ = q.integer_coefficients()
    if len(a) == 1 or len(b) == 1:
        return UniPoly([1])
    return UniPoly(_gcd_modular(a, b)).monic()


def poly_xgcd(p: UniPoly, q: UniPoly):
    """Return (g, s, t) with s p + t q = g monic gcd."""
    r0, r1 = p, q
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def inverse_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    """Inverse of a modulo m; requires gcd(a, m) = 1."""
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ArithmeticError("not invertible modulo m")
    return s % m


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), monic: same distinct roots, all simple."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UniPoly([1])
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def remove_common_roots(p: UniPoly, q: UniPoly) -> UniPoly:
    """Strip from p every root it shares with q (p is assumed squarefree)."""
    if q.is_zero():
        return UniPoly([1])
    g = poly_gcd(p, q)
    while g.degree > 0:
        p = p.exact_div(g)
        g = poly_gcd(p, g)
    return p


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = [_frac(y) for y in ys]
    xs = [_frac(x) for x in xs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        result = result * UniPoly([-xs[i], 1]) + coef[i]
    return result
