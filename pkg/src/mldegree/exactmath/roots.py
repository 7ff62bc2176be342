"""Real root counting (Sturm) and certified complex root approximation.

Complex roots are approximated with mpmath and then certified exactly: with
approximations z_1..z_n and Weierstrass corrections
W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j)), every connected component
of the union of disks D(z_i, n |W_i|) holds as many roots as disks
(Braess-Hadeler). Pairwise disjoint disks therefore isolate one root each.
All of this is evaluated in exact dyadic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

import mpmath

from mldegree.errors import NotSquarefree, PrecisionExhausted, ZeroPolynomial
from mldegree.exactmath.unipoly import UniPoly, poly_gcd

DEFAULT_TOL = Fraction(1, 2**40)
DEFAULT_START_BITS = 128
MAX_BITS = 4096


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # positive rescaling keeps sign pattern and tames coefficient growth
        ints, scale = (-r).integer_coefficients()
        seq.append(UniPoly(ints) * (1 if scale > 0 else -1))
    return seq


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs: Sequence[int]) -> int:
    s = [x for x in signs if x != 0]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(seq: list[UniPoly], x: Optional[Fraction], at_inf: int = 0) -> list[int]:
    if x is None:
        out = []
        for q in seq:
            lc = _sign(q.lc)
            out.append(lc if at_inf > 0 or q.degree % 2 == 0 else -lc)
        return out
    return [_sign(q(x)) for q in seq]


def _check_squarefree(p: UniPoly) -> None:
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no finite root count")
    if p.degree > 0 and poly_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree("real_root_count needs a squarefree polynomial")


def real_root_count(p: UniPoly, interval: Optional[tuple] = None) -> int:
    """Number of distinct real roots of squarefree p (in the open interval if given)."""
    _check_squarefree(p)
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    if interval is None:
        return _variations(_signs_at(seq, None, -1)) - _variations(_signs_at(seq, None, +1))
    lo, hi = (Fraction(v) for v in interval)
    if lo >= hi:
        return 0
    count = _variations(_signs_at(seq, lo)) - _variations(_signs_at(seq, hi))  # roots in (lo, hi]
    if p(hi) == 0:
        count -= 1
    return count


@dataclass(frozen=True)
class CertifiedRoot:
    """Exact dyadic center (re + i*im) and a rational radius bound."""

    re: Fraction
    im: Fraction
    radius: Fraction
    is_real: bool

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def mpc(self) -> mpmath.mpc:
        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)


def _to_dyadic(v: mpmath.mpf, bits: int) -> int:
    """Round v * 2^bits to an integer."""
    return int(mpmath.nint(mpmath.ldexp(v, bits)))


def _sqrt_upper(num: int, den: int, bits: int) -> Fraction:
    """A rational >= sqrt(num/den) with about `bits` fractional bits."""
    scaled = (num << (2 * bits)) // den + 1
    r = isqrt(scaled)
    if r * r < scaled:
        r += 1
    return Fraction(r, 1 << bits)


def _certify(p_int: list[int], centers: list[tuple[int, int]], e: int, tol: Fraction):
    """Inclusion radii (upper bounds) or None if disks overlap / are too wide."""
    n = len(p_int) - 1
    lc = p_int[-1]
    radii_sq = []
    for i, (a, b) in enumerate(centers):
        # P = 2^(e n) p(z) as a Gaussian integer, Horner on z = (a + ib) / 2^e
        pr, pi = 0, 0
        for k in range(n, -1, -1):
            pr, pi = pr * a - pi * b, pr * b + pi * a
            pr += p_int[k] << (e * (n - k))
        qn = 1
        for j, (c, d) in enumerate(centers):
            if j != i:
                da, db = a - c, b - d
                qn *= da * da + db * db
        if qn == 0:
            return None
        num = n * n * (pr * pr + pi * pi)
        den = lc * lc * qn * (1 << (2 * e))
        radii_sq.append((num, den))
    tol_sq = tol * tol
    radii = []
    for num, den in radii_sq:
        if Fraction(num, den) > tol_sq:
            return None
        radii.append(_sqrt_upper(num, den, e + 8))
    scale = Fraction(1, 1 << e)
    for i in range(n):
        for j in range(i + 1, n):
            da = (centers[i][0] - centers[j][0]) * scale
            db = (centers[i][1] - centers[j][1]) * scale
            if (radii[i] + radii[j]) ** 2 >= da * da + db * db:
                return None
    return radii


def complex_roots_numeric(
    p: UniPoly,
    precision_bits: int = DEFAULT_START_BITS,
    tol: Fraction = DEFAULT_TOL,
    max_bits: int = MAX_BITS,
) -> tuple[list[CertifiedRoot], int]:
    """Certified approximations to all roots of squarefree p.

    Returns the roots (sorted by real then imaginary part) and the precision
    at which certification succeeded. Precision doubles up to ``max_bits``.
    """
    _check_squarefree(p)
    if p.degree <= 0:
        return [], precision_bits
    p_int, _ = p.integer_coefficients()
    tol = Fraction(tol)
    bits = precision_bits
    while bits <= max_bits:
        with mpmath.workprec(bits):
            try:
                approx = mpmath.polyroots(
                    [mpmath.mpf(c) for c in reversed(p_int)],
                    maxsteps=max(200, 20 * p.degree),
                    extraprec=bits,
                )
            except mpmath.libmp.NoConvergence:
                approx = None
            if approx is not None:
                if p.degree == 1:
                    approx = [approx] if not isinstance(approx, list) else approx
                centers = [
                    (_to_dyadic(mpmath.re(z), bits), _to_dyadic(mpmath.im(z), bits)) for z in approx
                ]
                radii = _certify(p_int, centers, bits, tol)
                if radii is not None:
                    roots = _finish(centers, radii, bits)
                    if roots is not None:
                        return roots, bits
        bits *= 2
    raise PrecisionExhausted(f"could not certify {p.degree} roots within {max_bits} bits")


def _finish(centers, radii, bits) -> Optional[list[CertifiedRoot]]:
    scale = Fraction(1, 1 << bits)
    pts = [(Fraction(a) * scale, Fraction(b) * scale) for a, b in centers]
    out = []
    for i, ((re, im), r) in enumerate(zip(pts, radii)):
        # a disk meeting the real axis whose mirror image meets no other disk
        # holds a root equal to its own conjugate
        real = abs(im) <= r
        if real:
            for j, ((re2, im2), r2) in enumerate(zip(pts, radii)):
                if j != i:
                    da, db = re - re2, -im - im2
                    if (r + r2) ** 2 >= da * da + db * db:
                        return None  # realness undecided at this precision
        out.append(CertifiedRoot(re, im, r, real))
    out.sort(key=lambda z: (z.re, z.im))
    return out
