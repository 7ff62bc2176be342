"""Independent critical-point counter for likelihood functions prod f_i^u_i, d <= 2.

Counts are exact: the d = 2 solver eliminates through subresultants after a
random unimodular shear, so each solution appears as a root of a squarefree
univariate polynomial together with a rational parametrization of its second
coordinate. Numerical certification of the individual points runs on top of
the exact count and only feeds the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Optional, Sequence

import mpmath

from mldegree.errors import DegenerateSystem, InputError, UnsupportedDimension
from mldegree.exactmath import format_rational
from mldegree.exactmath.multipoly import MultiPoly
from mldegree.exactmath.resultant import resultant, subresultant_coefficients
from mldegree.exactmath.roots import DEFAULT_TOL, MAX_BITS, complex_roots_numeric, real_root_count
from mldegree.exactmath.unipoly import (
    UniPoly,
    int_poly_mul,
    poly_gcd,
    remove_common_roots,
    squarefree_part,
)

DEFAULT_PRECISION = 256
DEFAULT_SEED = 20240101
MAX_SHEAR_ATTEMPTS = 40


@dataclass(frozen=True)
class LikelihoodSystem:
    """Cleared critical equations g_1..g_d of f = prod f_i^u_i."""

    d: int
    f: tuple[MultiPoly, ...]
    u: tuple[int, ...]
    g: tuple[MultiPoly, ...]
    divisors: tuple[MultiPoly, ...]
    torus: bool


def build_system(f: Sequence[MultiPoly], u: Sequence[int], torus: Optional[bool] = None) -> LikelihoodSystem:
    """Numerators of the logarithmic derivative, cleared to ordinary polynomials.

    Laurent inputs are handled on the torus: each numerator is divided by its
    largest monomial factor and solutions on coordinate hyperplanes are dropped.
    """
    f = tuple(f)
    if not f:
        raise InputError("empty model")
    d = f[0].nvars
    if d not in (1, 2):
        raise UnsupportedDimension(f"oracle handles d = 1, 2 (got {d})")
    if any(p.nvars != d for p in f):
        raise InputError("all polynomials must live in the same number of variables")
    if any(p.is_zero() for p in f):
        raise InputError("zero polynomial in model")
    if len(u) != len(f) or any(int(x) != x or x == 0 for x in u):
        raise InputError("need one nonzero integer weight per polynomial")
    u = tuple(int(x) for x in u)
    laurent = any(p.is_laurent() for p in f)
    torus = laurent if torus is None else (torus or laurent)
    gs = []
    for k in range(d):
        total = MultiPoly(d)
        for i, fi in enumerate(f):
            term = fi.derivative(k) * u[i]
            for j, fj in enumerate(f):
                if j != i:
                    term = term * fj
            total = total + term
        if total.is_zero():
            raise DegenerateSystem(f"critical numerator g_{k + 1} vanishes identically")
        gs.append(total.cleared() if total.is_laurent() or torus else total)
    divisors = [p.cleared() if p.is_laurent() else p for p in f]
    if torus:
        divisors += [MultiPoly.var(d, k) for k in range(d)]
    divisors = [p for p in divisors if p.total_degree() > 0]
    return LikelihoodSystem(d, f, u, tuple(gs), tuple(divisors), torus)


@dataclass
class CriticalCountReport:
    complex_count: int
    real_count: Optional[int]
    certified: bool
    filtered_extraneous: int
    precision_used: int
    residual_bound: Fraction
    roots: list[tuple[complex, ...]] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    shear: Optional[tuple[tuple[int, int], tuple[int, int]]] = None

    def to_json(self) -> dict:
        out = {
            "complex_count": self.complex_count,
            "real_count": self.real_count,
            "certified": self.certified,
            "precision_bits": self.precision_used,
            "filtered_extraneous": self.filtered_extraneous,
            "residual_bound": format_rational(self.residual_bound),
            "roots": [[_format_complex(z) for z in pt] for pt in self.roots],
            "caveats": list(self.caveats),
        }
        if self.shear is not None:
            out["shear"] = [list(r) for r in self.shear]
        return out


def _format_complex(z: complex, digits: int = 15) -> str:
    re = mpmath.nstr(mpmath.mpf(z.real), digits)
    if z.imag == 0:
        return re
    return f"{re}{'+' if z.imag > 0 else '-'}{mpmath.nstr(abs(mpmath.mpf(z.imag)), digits)}j"


# ---------------------------------------------------------------- d = 1


def count_critical_d1(
    sys: LikelihoodSystem,
    precision: int = DEFAULT_PRECISION,
    tol: Fraction = DEFAULT_TOL,
) -> CriticalCountReport:
    if sys.d != 1:
        raise InputError("count_critical_d1 expects a univariate system")
    g = sys.g[0].as_univariate()
    if g.degree <= 0:
        return CriticalCountReport(0, 0, True, 0, precision, Fraction(0))
    sf = squarefree_part(g)
    good = sf
    for p in sys.divisors:
        good = remove_common_roots(good, p.as_univariate())
    caveats = []
    if poly_gcd(good, g.derivative()).degree > 0:
        caveats.append("distinct-count only: some critical points are multiple")
    roots, bits = complex_roots_numeric(good, precision, tol, max(MAX_BITS, precision)) if good.degree > 0 else ([], precision)
    return CriticalCountReport(
        complex_count=good.degree,
        real_count=real_root_count(good) if good.degree > 0 else 0,
        certified=True,
        filtered_extraneous=sf.degree - good.degree,
        precision_used=bits,
        residual_bound=max((r.radius for r in roots), default=Fraction(0)),
        roots=[(complex(r),) for r in roots],
        caveats=caveats,
    )


# ---------------------------------------------------------------- Q[x][y] helpers
# A bivariate polynomial is a list of UniPoly in x, index = power of y.


def _trim(a: list[UniPoly]) -> list[UniPoly]:
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def _ydeg(a: list[UniPoly]) -> int:
    return len(a) - 1


def _content(a: list[UniPoly]) -> UniPoly:
    c = UniPoly()
    for p in a:
        c = poly_gcd(c, p) if not c.is_zero() else p.monic()
    return c


def _primitive(a: list[UniPoly]) -> list[UniPoly]:
    c = _content(a)
    return [p.exact_div(c) for p in a]


def _prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    a = _trim(a)
    lb, db = b[-1], _ydeg(b)
    while a and _ydeg(a) >= db:
        la, shift = a[-1], _ydeg(a) - db
        new = [p * lb for p in a]
        for k, q in enumerate(b):
            new[k + shift] = new[k + shift] - la * q
        a = _trim(new)
    return a


def _bigcd(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """gcd in Q[x, y] by primitive pseudo-remainder sequence."""
    a, b = _trim(a), _trim(b)
    if not a:
        return b
    if not b:
        return a
    cont = poly_gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if _ydeg(a) < _ydeg(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return [p * cont for p in a]


def _bidiv(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Exact quotient a / b in Q[x, y]; b must have a constant leading y-coefficient."""
    lb = b[-1]
    if lb.degree != 0:
        raise ValueError("divisor needs a constant leading coefficient in y")
    a = _trim(a)
    q = [UniPoly()] * max(_ydeg(a) - _ydeg(b) + 1, 0)
    while a and _ydeg(a) >= _ydeg(b):
        shift = _ydeg(a) - _ydeg(b)
        t = a[-1] * (1 / lb.lc)
        q[shift] = t
        for k, c in enumerate(b):
            a[k + shift] = a[k + shift] - t * c
        a = _trim(a)
    if a:
        raise ArithmeticError("inexact bivariate division")
    return q


def _is_const(a: list[UniPoly]) -> bool:
    return len(a) <= 1 and (not a or a[0].degree <= 0)


# ---------------------------------------------------------------- d = 2


class _Reshear(Exception):
    pass


def _random_unimodular(rng: random.Random) -> tuple[tuple[int, int], tuple[int, int]]:
    while True:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        if a * d - b * c in (1, -1):
            return ((a, b), (c, d))


def _subres(p: list[UniPoly], q: list[UniPoly], j: int) -> list[UniPoly]:
    if _ydeg(p) == _ydeg(q) == j:
        return list(p)
    if _ydeg(p) == j and _ydeg(q) > j:
        return subresultant_coefficients(q, p, j)
    return subresultant_coefficients(p, q, j)


@dataclass
class _Part:
    """Squarefree E(x) whose roots carry exactly one solution y = num(x) / den(x)."""

    E: UniPoly
    num: UniPoly
    den: UniPoly


def _at_fiber(a: list[UniPoly], num: UniPoly, den: UniPoly) -> UniPoly:
    """den^deg_y(a) * a(x, num/den) up to a nonzero constant, computed over Z."""
    m = _ydeg(a)
    N, sn = num.integer_coefficients()
    D, sd = den.integer_coefficients()
    npow, dpow = [[1]], [[1]]
    for _ in range(m):
        npow.append(int_poly_mul(npow[-1], N))
        dpow.append(int_poly_mul(dpow[-1], D))
    weights, polys = [], []
    for k, c in enumerate(a):
        if c.is_zero():
            continue
        C, sc = c.integer_coefficients()
        weights.append(Fraction(1) / (sc * sn ** k * sd ** (m - k)))
        polys.append(int_poly_mul(C, int_poly_mul(npow[k], dpow[m - k])))
    scale = lcm(*(w.denominator for w in weights))
    total = [0] * max(len(p) for p in polys)
    for w, p in zip(weights, polys):
        wi = w.numerator * (scale // w.denominator)
        for i, v in enumerate(p):
            total[i] += wi * v
    return UniPoly(total)


def _solve_sheared(h1, h2, divs) -> tuple[list[_Part], int, UniPoly]:
    if _ydeg(h1) <= 0 or _ydeg(h2) <= 0:
        return [], 0, UniPoly([1])
    R = resultant(h1, h2)
    g = _bigcd(h1, h2) if R.is_zero() else [UniPoly([1])]
    if not _is_const(g):
        F = [UniPoly([1])]
        for dv in divs:
            F = _mul(F, dv)
        rest = g
        while not _is_const(rest):
            c = _bigcd(rest, F)
            if _is_const(c):
                raise DegenerateSystem("critical equations share a curve off the divisor: infinitely many critical points")
            rest = _bidiv(rest, _monic_y(c))
        gm = _monic_y(g)
        h1, h2 = _bidiv(h1, gm), _bidiv(h2, gm)
        if _ydeg(h1) <= 0 or _ydeg(h2) <= 0:
            return [], 0, UniPoly([1])
        R = resultant(h1, h2)
    if R.is_zero():
        raise DegenerateSystem("resultant vanishes after removing the common factor")
    if R.degree <= 0:
        return [], 0, R
    Rs = squarefree_part(R)
    parts: list[_Part] = []
    s10, s11 = _subres(h1, h2, 1)[:2]
    common = poly_gcd(Rs, s11)
    A = Rs.exact_div(common)
    if A.degree > 0:
        parts.append(_Part(A, -s10, s11))
    rem = common
    top = min(_ydeg(h1), _ydeg(h2))
    j = 2
    while rem.degree > 0:
        if j > top:
            raise _Reshear()
        S = _subres(h1, h2, j)
        psc = S[j]
        keep = poly_gcd(rem, psc)
        E = rem.exact_div(keep)
        if E.degree > 0:
            # the fiber gcd must be a single point of multiplicity j:
            # S_j = psc (y - y0)^j with y0 = -S[j-1] / (j psc)
            num, den = -S[j - 1], psc * j
            for k in range(j + 1):
                lhs = S[k] * den ** (j - k)
                rhs = psc * comb(j, k) * num ** (j - k)
                if not ((lhs - rhs) % E).is_zero():
                    raise _Reshear()
            parts.append(_Part(E, num, den))
        rem = keep
        j += 1
    filtered = 0
    good = []
    for part in parts:
        E = part.E
        for dv in divs:
            H = _at_fiber(dv, part.num, part.den)
            shared = poly_gcd(E, H) if not H.is_zero() else E
            if shared.degree > 0:
                filtered += shared.degree
                E = E.exact_div(shared)
            if E.degree <= 0:
                break
        if E.degree > 0:
            good.append(_Part(E.monic(), part.num, part.den))
    return good, filtered, R


def _mul(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    out = [UniPoly()] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            out[i + j] = out[i + j] + p * q
    return out


def _monic_y(a: list[UniPoly]) -> list[UniPoly]:
    lc = a[-1]
    if lc.degree != 0:
        raise _Reshear()
    return [p * (1 / lc.lc) for p in a]


def _shear_ok(polys: Sequence[MultiPoly]) -> bool:
    for p in polys:
        if p.total_degree() > 0 and p.degree_in(1) != p.total_degree():
            return False
    return True


def count_critical_d2(
    sys: LikelihoodSystem,
    precision: int = DEFAULT_PRECISION,
    tol: Fraction = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
    max_bits: int = MAX_BITS,
    certify_points: bool = True,
) -> CriticalCountReport:
    if sys.d != 2:
        raise InputError("count_critical_d2 expects a bivariate system")
    rng = random.Random(seed)
    for _ in range(MAX_SHEAR_ATTEMPTS):
        M = _random_unimodular(rng)
        hs = [g.substitute_linear(M) for g in sys.g]
        ds = [p.substitute_linear(M) for p in sys.divisors]
        if not _shear_ok(hs + ds):
            continue
        try:
            parts, filtered, R = _solve_sheared(
                hs[0].coefficients_in_last(),
                hs[1].coefficients_in_last(),
                [p.coefficients_in_last() for p in ds],
            )
        except _Reshear:
            continue
        return _report(sys, M, parts, filtered, R, precision, tol, max_bits, certify_points)
    raise DegenerateSystem("no admissible shear found: the solution set could not be put in general position")


def _report(sys, M, parts, filtered, R, precision, tol, max_bits, certify_points) -> CriticalCountReport:
    complex_count = sum(p.E.degree for p in parts)
    real_count = sum(real_root_count(p.E) for p in parts)
    caveats = []
    dR = R.derivative()
    if any(poly_gcd(p.E, dR).degree > 0 for p in parts):
        caveats.append("distinct-count only: the eliminant has repeated roots at counted points")
    points: list[tuple[complex, complex]] = []
    bits = precision
    radius = Fraction(0)
    if certify_points:
        for p in parts:
            roots, used = complex_roots_numeric(p.E, precision, tol, max(max_bits, precision))
            bits = max(bits, used)
            with mpmath.workprec(used):
                for r in roots:
                    x = r.mpc()
                    y = p.num(x) / p.den(x)
                    t1 = M[0][0] * x + M[0][1] * y
                    t2 = M[1][0] * x + M[1][1] * y
                    points.append((complex(t1), complex(t2)))
                radius = max([radius] + [r.radius for r in roots])
        points.sort(key=lambda z: (round(z[0].real, 12), round(z[0].imag, 12), round(z[1].real, 12), round(z[1].imag, 12)))
    return CriticalCountReport(
        complex_count=complex_count,
        real_count=real_count,
        certified=True,
        filtered_extraneous=filtered,
        precision_used=bits,
        residual_bound=radius,
        roots=points,
        caveats=caveats,
        shear=M,
    )


def count_critical(sys: LikelihoodSystem, **kwargs) -> CriticalCountReport:
    if sys.d == 1:
        kwargs.pop("seed", None)
        kwargs.pop("max_bits", None)
        kwargs.pop("certify_points", None)
        return count_critical_d1(sys, **kwargs)
    return count_critical_d2(sys, **kwargs)


def shear_counts(sys: LikelihoodSystem, seeds: Sequence[int]) -> list[int]:
    """complex_count under independent random shears (should all agree)."""
    return [count_critical_d2(sys, seed=s, certify_points=False).complex_count for s in seeds]


@dataclass(frozen=True)
class SemicontinuityVerdict:
    passed: bool
    oracle_count: int
    generic_value: int


def semicontinuity_check(generic_value: int, special_model: Sequence[MultiPoly], u: Sequence[int], **kwargs) -> SemicontinuityVerdict:
    rep = count_critical(build_system(special_model, u), **kwargs)
    return SemicontinuityVerdict(rep.complex_count <= generic_value, rep.complex_count, generic_value)


def verify_linear_model(A, u: Sequence[int], value: int, seed: int = DEFAULT_SEED) -> Optional[bool]:
    """Recount critical points of a linear model at u and three random weight vectors."""
    if A.d > 2:
        return None
    f = [MultiPoly(A.d, {**{tuple(int(i == k) for i in range(A.d)): a[k] for k in range(A.d)}, (0,) * A.d: c})
         for a, c in A.hyperplanes]
    rng = random.Random(seed)
    weights = [list(u)] + [[rng.randint(1, 50) for _ in f] for _ in range(3)]
    counts = [count_critical(build_system(f, w), certify_points=False).complex_count if A.d == 2
              else count_critical(build_system(f, w)).complex_count for w in weights]
    return all(c == value for c in counts)


# ---------------------------------------------------------------- example models


def independence_model() -> list[MultiPoly]:
    x, y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    return [x * y, (1 - x) * y, x * (1 - y), (1 - x) * (1 - y)]


def circle_ellipse_model() -> list[MultiPoly]:
    """Two coordinate lines, a circle through the origin and an ellipse."""
    x, y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    return [x, y, (x - 1) ** 2 + (y - 1) ** 2 - 2, (x + 1) ** 2 + (y - 2) ** 2 * 2 - 9]


def nested_ellipses() -> list[MultiPoly]:
    x, y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    return [x * x + y * y * 4 - 4, x * x * 4 + y * y - 4]


def random_dense_poly(rng: random.Random, d: int, degree: int, bound: int = 100) -> MultiPoly:
    """Dense polynomial of the given total degree with coefficients k/7, k uniform in [-bound, bound]."""
    terms = {}
    for e in _exponents(d, degree):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        terms[e] = Fraction(c, 7)
    return MultiPoly(d, terms)


def _exponents(d: int, degree: int) -> list[tuple[int, ...]]:
    if d == 1:
        return [(k,) for k in range(degree + 1)]
    return [(a,) + rest for a in range(degree + 1) for rest in _exponents(d - 1, degree - a)]


def random_generic_model(rng: random.Random, d: int, degrees: Sequence[int]) -> tuple[list[MultiPoly], list[int]]:
    f = [random_dense_poly(rng, d, b) for b in degrees]
    u = [rng.randint(1, 97) for _ in degrees]
    return f, u
