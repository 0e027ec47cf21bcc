"""Shabat-polynomial checks over the rationals.

A polynomial ``p`` is accepted when all of its finite critical values lie in
``{0, c}`` for one nonzero rational ``c``.  The preimage of the segment
``[0, c]`` is then a plane tree whose white vertices are the roots of ``p``
and black vertices the roots of ``p - c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Sequence

from ..tree import Passport
from .ratpoly import RatPoly, gcd, interpolate, multiplicity_profile, resultant
from .roots import rational_roots, root_multiplicity


class ShabatError(ValueError):
    pass


class DegreeTooSmall(ShabatError):
    pass


class NotShabat(ShabatError):
    pass


class NoRationalSecondValue(ShabatError):
    pass


class ZeroCriticalValueMissing(NotShabat):
    pass


class NotASquare(ValueError):
    pass


class CriticalValues(NamedTuple):
    values: list[Fraction]
    all_rational: bool
    resultant: RatPoly


def critical_value_resultant(p: RatPoly, samples: Sequence | None = None) -> RatPoly:
    """``R(y) = Res_x(p(x) - y, p'(x))`` rebuilt from its values at rational points.

    ``R`` has degree at most ``deg p - 1`` in ``y``, so ``deg p`` samples
    determine it.
    """
    d = p.degree
    if samples is None:
        samples = range(d)
    samples = [Fraction(s) for s in samples]
    if len(samples) < d:
        raise ValueError(f"need at least {d} sample points, got {len(samples)}")
    dp = p.derivative()
    pts = [(y0, resultant(p - y0, dp)) for y0 in samples[:d]]
    return interpolate(pts)


def critical_values(p: RatPoly, samples: Sequence | None = None) -> CriticalValues:
    if p.degree < 2:
        raise DegreeTooSmall(f"degree {p.degree} polynomial has no critical points")
    res = critical_value_resultant(p, samples)
    vals = rational_roots(res)
    covered = sum(root_multiplicity(res, v) for v in vals)
    return CriticalValues(vals, covered == res.degree, res)


@dataclass(frozen=True)
class ShabatCertificate:
    c: Fraction
    white_profile: tuple[int, ...]
    black_profile: tuple[int, ...]
    passport: Passport

    @property
    def swapped(self) -> bool:
        """True when the polynomial's zero fiber carries the black list of the type."""
        return self.passport.white != self.white_profile

    def to_json(self) -> dict:
        return {
            "c": _fmt(self.c),
            "white_profile": list(self.white_profile),
            "black_profile": list(self.black_profile),
            "passport": str(self.passport),
        }


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def verify_shabat(p: RatPoly, c=None) -> ShabatCertificate:
    """Certify ``p`` as a Shabat polynomial with critical values in ``{0, c}``.

    ``c`` is discovered from the critical values when omitted.  The check is
    ``deg gcd(p, p') + deg gcd(p - c, p') == deg p - 1``: every critical
    point is then a multiple root of ``p`` or of ``p - c``.
    """
    d = p.degree
    if d < 2:
        raise DegreeTooSmall(f"degree {d} polynomial has no critical points")
    if c is None:
        cv = critical_values(p)
        if not cv.all_rational:
            raise NotShabat("some critical values are irrational")
        nonzero = [v for v in cv.values if v != 0]
        if len(nonzero) > 1:
            raise NotShabat(f"more than two critical values: {', '.join(map(_fmt, cv.values))}")
        if not nonzero:
            raise NoRationalSecondValue("0 is the only critical value; pass the second value explicitly")
        c = nonzero[0]
    c = Fraction(c)
    if c == 0:
        raise ValueError("the second critical value must be nonzero")
    dp = p.derivative()
    dw = gcd(p, dp).degree
    db = gcd(p - c, dp).degree
    if dw + db != d - 1:
        if dw == 0:
            raise ZeroCriticalValueMissing(
                f"0 is not a critical value and critical values are not all equal to {_fmt(c)}"
            )
        raise NotShabat(f"critical values are not contained in {{0, {_fmt(c)}}}")
    white = tuple(multiplicity_profile(p))
    black = tuple(multiplicity_profile(p - c))
    return ShabatCertificate(c, white, black, Passport(white, black).normalized())


def _rat_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def poly_sqrt(p: RatPoly) -> RatPoly:
    """The square root with positive leading coefficient, if ``p`` is a square."""
    if not p:
        return RatPoly()
    if p.degree % 2:
        raise NotASquare("odd degree")
    lead = _rat_sqrt(p.lc)
    if lead is None:
        raise NotASquare("leading coefficient is not a rational square")
    m = p.degree // 2
    # q[m-j] from the coefficient of x^(2m-j), top down
    q = [Fraction(0)] * (m + 1)
    q[m] = lead
    for j in range(1, m + 1):
        acc = p.coeffs[2 * m - j]
        for i in range(1, j):
            acc -= q[m - i] * q[m - j + i]
        q[m - j] = acc / (2 * lead)
    root = RatPoly(q)
    if root * root != p:
        raise NotASquare("coefficient recursion does not reproduce the polynomial")
    return root


def verify_power(p: RatPoly, q: RatPoly, k: int) -> bool:
    if k < 2:
        raise ValueError("exponent must be at least 2")
    return q ** k == p


def antiderivative(p: RatPoly) -> RatPoly:
    return p.antiderivative()
