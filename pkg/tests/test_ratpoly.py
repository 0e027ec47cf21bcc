"""Exact polynomial arithmetic, checked against sympy where it helps."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dessin.poly import (
    DivisionByZeroPoly,
    RatPoly,
    format_poly,
    gcd,
    interpolate,
    multiplicity_profile,
    rational_roots,
    resultant,
    root_multiplicity,
    squarefree_decomposition,
)

X = sympy.Symbol("x")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, min_size=0, max_size=6).map(RatPoly)
nonzero = polys.filter(bool)


def to_sympy(p: RatPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], X, domain="QQ")


def from_sympy(q) -> RatPoly:
    return RatPoly([Fraction(int(c.p), int(c.q)) for c in reversed(q.all_coeffs())])


def test_construction():
    p = RatPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert RatPoly().degree == -1
    assert RatPoly([Fraction(1, 2)]).lc == Fraction(1, 2)
    with pytest.raises(TypeError):
        RatPoly([0.5])


def test_format():
    assert format_poly(RatPoly([1, Fraction(-32, 5), 1])) == "x^2 - 32/5*x + 1"
    assert format_poly(RatPoly([0, -1])) == "-x"
    assert format_poly(RatPoly()) == "0"
    assert str(RatPoly([Fraction(3, 4)])) == "3/4"


def test_division_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        RatPoly([1, 1]).divmod(RatPoly())


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_ring_operations(f, g):
    assert to_sympy(f + g) == to_sympy(f) + to_sympy(g)
    assert to_sympy(f * g) == to_sympy(f) * to_sympy(g)
    assert to_sympy(f - g) == to_sympy(f) - to_sympy(g)


@settings(max_examples=150, deadline=None)
@given(polys, nonzero)
def test_divmod(f, g):
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_gcd_against_sympy(f, g):
    want = sympy.gcd(to_sympy(f), to_sympy(g))
    got = gcd(f, g)
    if not want.is_zero:
        want = want.monic()
    assert to_sympy(got) == want


def sylvester_det(f: RatPoly, g: RatPoly) -> Fraction:
    """Determinant of the Sylvester matrix, the textbook definition."""
    m, n = f.degree, g.degree
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fr + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (m - 1 - i))
    det = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in rows]).det()
    return Fraction(int(det.p), int(det.q))


@settings(max_examples=150, deadline=None)
@given(nonzero, nonzero)
def test_resultant_against_sylvester(f, g):
    if f.degree == 0 and g.degree == 0:
        return  # empty matrix
    assert resultant(f, g) == sylvester_det(f, g)


def test_resultant_sign_convention():
    # Res(f, g) = lc(f)^deg g * prod g(roots of f); here g(-1) = -1
    assert resultant(RatPoly([1, 1]), RatPoly([0, 0, 0, 1])) == -1
    assert resultant(RatPoly([0, 0, 0, 1]), RatPoly([1, 1])) == 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.fractions(-5, 5, max_denominator=4), st.integers(1, 4)), min_size=1, max_size=4),
       st.fractions(min_value=1, max_value=9, max_denominator=5))
def test_squarefree_reconstruction(factors, lead):
    p = RatPoly([lead])
    for r, m in factors:
        p = p * RatPoly([-r, 1]) ** m
    parts = squarefree_decomposition(p)
    rebuilt = RatPoly([p.lc])
    for i, f in enumerate(parts, start=1):
        rebuilt = rebuilt * f ** i
        assert gcd(f, f.derivative()) == RatPoly([1])
        assert f.lc == 1
    assert rebuilt == p
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            assert gcd(parts[i], parts[j]) == RatPoly([1])
    # sympy's squarefree list has the same multiplicity structure
    _, sq = sympy.sqf_list(to_sympy(p))
    assert sorted(m for f, m in sq for _ in range(f.degree())) == sorted(
        m for m, f in enumerate(parts, start=1) for _ in range(f.degree)
    )


def test_multiplicity_profile():
    p = RatPoly([0, 1]) ** 6 * RatPoly([Fraction(32, 5), -2, 1]) ** 2
    assert multiplicity_profile(p) == [6, 2, 2]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(-6, 6, max_denominator=7), min_size=1, max_size=5), nonzero)
def test_rational_roots_found(roots, extra):
    # append an irreducible quadratic so not every root is rational
    p = RatPoly.from_roots(roots) * RatPoly([2, 0, 1])
    assert rational_roots(p) == sorted(set(roots))
    for r in set(roots):
        assert root_multiplicity(p, r) == roots.count(r)


@settings(max_examples=100, deadline=None)
@given(nonzero)
def test_rational_roots_against_sympy(p):
    want = sorted(Fraction(int(r.p), int(r.q)) for r in sympy.roots(to_sympy(p), filter="Q", multiple=False)) \
        if p.degree > 0 else []
    assert rational_roots(p) == want


def test_rational_roots_zero_poly():
    with pytest.raises(ValueError):
        rational_roots(RatPoly())


@settings(max_examples=100, deadline=None)
@given(nonzero)
def test_interpolation_roundtrip(p):
    pts = [(Fraction(i, 3), p(Fraction(i, 3))) for i in range(p.degree + 1)]
    assert interpolate(pts) == p


def test_interpolation_duplicate_nodes():
    with pytest.raises(ValueError):
        interpolate([(1, 2), (1, 3)])


@settings(max_examples=100, deadline=None)
@given(polys)
def test_antiderivative(p):
    a = p.antiderivative()
    assert a.derivative() == p
    assert not a or a.coeffs[0] == 0


def test_content_and_primitive():
    p = RatPoly([Fraction(1, 2), Fraction(3, 4)])
    assert p.primitive_part() == RatPoly([2, 3])
    assert p.content() * p.primitive_part() == p
