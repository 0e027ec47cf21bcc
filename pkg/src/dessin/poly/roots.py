"""Exact rational roots of rational polynomials.

A rational root u/v of a primitive integer polynomial has v dividing the
leading coefficient L, so it lies on the grid (1/L)Z.  Real roots are
isolated with a Sturm sequence and bisected until each isolating interval is
narrower than 1/L; the single grid point left inside is then tested exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .ratpoly import RatPoly, squarefree_decomposition


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r)
    return seq


def _sign_changes(seq, x: Fraction) -> int:
    signs = [s for s in (q(x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def _root_bound(p: RatPoly) -> Fraction:
    lc = abs(p.lc)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1])


def rational_roots(p: RatPoly) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, ascending."""
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    if p.degree < 1:
        return []
    # squarefree part keeps the Sturm count exact
    f = RatPoly([1])
    for factor in squarefree_decomposition(p):
        f = f * factor
    f = f.primitive_part()
    roots = []
    if f.coeffs[0] == 0:
        roots.append(Fraction(0))
        f = RatPoly(f.coeffs[1:])
    if f.degree < 1:
        return roots
    lead = int(f.lc)
    step = Fraction(1, lead)
    seq = sturm_sequence(f)
    bound = _root_bound(f)
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if count == 0:
            continue
        # grid points k/lead in (lo, hi]
        k_lo = floor(lo * lead) + 1
        k_hi = floor(hi * lead)
        if k_lo > k_hi:
            continue
        if hi - lo < step:
            # at most one grid point left in (lo, hi]
            x = k_lo * step
            if f(x) == 0:
                roots.append(x)
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(set(roots))


def root_multiplicity(p: RatPoly, r: Fraction) -> int:
    lin = RatPoly([-r, 1])
    m = 0
    q = p
    while q:
        quo, rem = q.divmod(lin)
        if rem:
            break
        q = quo
        m += 1
    return m

