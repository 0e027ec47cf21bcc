"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from math import lcm
from typing import Iterable, Sequence


class DivisionByZeroPoly(ZeroDivisionError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floats are not exact; pass int, Fraction or 'a/b' strings")
    return Fraction(c)


class RatPoly:
    """Polynomial in x; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RatPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-_frac(r), 1])
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly([other])
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = RatPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        other = self._coerce(other)
        if not other:
            raise DivisionByZeroPoly("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), RatPoly(rem)
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lc
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return RatPoly(quot), RatPoly(rem[: other.degree])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, RatPoly) else RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "RatPoly":
        return RatPoly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def monic(self) -> "RatPoly":
        if not self:
            return self
        return RatPoly([c / self.lc for c in self.coeffs])

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` primitive with integer coefficients."""
        if not self:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = reduce(igcd, (abs(c.numerator * (den // c.denominator)) for c in self.coeffs))
        return Fraction(num, den)

    def primitive_part(self) -> "RatPoly":
        """Integer-coefficient primitive polynomial with positive leading coefficient."""
        if not self:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return RatPoly([x / c for x in self.coeffs])

    def int_coeffs(self) -> list[int]:
        pp = self.primitive_part()
        return [int(c) for c in pp.coeffs]

    def __repr__(self):
        return f"RatPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: RatPoly, var: str = "x") -> str:
    """Descending monomials, exact coefficients, e.g. ``x^2 - 32/5*x + 1``."""
    if not p:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = _fmt_rat(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{_fmt_rat(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _pseudo_rem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Integer pseudo-remainder of coefficient lists (constant term first)."""
    rem = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(rem) - 1 >= db and any(rem):
        shift = len(rem) - 1 - db
        lr = rem[-1]
        rem = [x * lb for x in rem]
        for j, c in enumerate(b):
            rem[shift + j] -= lr * c
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _int_primitive(cs: list[int]) -> list[int]:
    g = reduce(igcd, (abs(c) for c in cs), 0)
    if g == 0:
        return []
    out = [c // g for c in cs]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd via a primitive pseudo-remainder sequence over the integers."""
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a = f.int_coeffs()
    b = g.int_coeffs()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    return RatPoly(a).monic()


def squarefree_decomposition(p: RatPoly) -> list[RatPoly]:
    """Yun's algorithm: ``[f1, f2, ...]`` with ``p = lc * prod(fi**i)``.

    Every ``fi`` is monic and squarefree and they are pairwise coprime; the
    list ends at the highest multiplicity (trailing entries are never 1).
    """
    if not p:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree == 0:
        return []
    f = p.monic()
    fp = f.derivative()
    a = gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = gcd(b, d)
        out.append(a)
        b = b // a
        c = d // a
        d = c - b.derivative()
    while out and out[-1] == RatPoly([1]):
        out.pop()
    return out


def multiplicity_profile(p: RatPoly) -> list[int]:
    """Multiplicities of the distinct complex roots of p, nonincreasing."""
    prof = []
    for i, f in enumerate(squarefree_decomposition(p), start=1):
        prof.extend([i] * f.degree)
    return sorted(prof, reverse=True)


def resultant(f: RatPoly, g: RatPoly) -> Fraction:
    """Resultant by the Euclidean recursion over the rationals."""
    if not f or not g:
        return Fraction(0)
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc ** m
    if m == 0:
        return f.lc ** n
    r = f % g
    if not r:
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lc ** (m - r.degree) * resultant(g, r)


def interpolate(points: Sequence[tuple]) -> RatPoly:
    """Lagrange interpolation through ``(x, y)`` pairs with distinct x."""
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = RatPoly()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = RatPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * RatPoly([-xj, 1])
                denom *= xi - xj
        out = out + basis * (_frac(yi) / denom)
    return out
