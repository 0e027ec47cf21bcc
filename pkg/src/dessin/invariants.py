"""Galois-invariant fingerprint of a plane tree.

Collects automorphism order, rotation-group order and primitivity, the
passports of proper quotient trees, and the trees this one is a k-th power
lift of.  Trees in one Galois orbit share the whole fingerprint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .enumeration import all_classes
from .permgroup import PermGroup
from .tree import (
    Passport,
    PlaneTree,
    TreeError,
    automorphism_order,
    canonical_form,
    canonical_white,
)


class InvalidExponent(ValueError):
    pass


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def reductions(tree: PlaneTree) -> list[tuple[int, PlaneTree]]:
    """All quotients onto smaller trees, the one-edge quotient included.

    With sigma standard, the edge classes of any equivariant map are the
    residue classes modulo the quotient edge count, so it suffices to test
    each proper divisor.
    """
    n = tree.n
    a = canonical_white(tree)
    out = []
    for d in divisors(n):
        if d == n:
            continue
        if any(a[i] % d != a[i % d] % d for i in range(n)):
            continue
        try:
            quotient = PlaneTree.from_sigma_and_white(tuple(a[r] % d for r in range(d)))
        except TreeError:
            continue
        out.append((d, quotient))
    return out


def is_reducible(tree: PlaneTree) -> bool:
    return any(d > 1 for d, _ in reductions(tree))


def power_lift(tree: PlaneTree, k: int) -> PlaneTree:
    """Tree of ``q**k`` given the tree of ``q``.

    Edge ``(e, j)`` gets index ``e*k + j``.  Around white vertices each old
    edge is followed by its ``k - 1`` new copies; the copies ``j > 0`` end in
    new black leaves.
    """
    if k < 2:
        raise InvalidExponent(f"exponent must be at least 2, got {k}")
    n = tree.n
    white = [0] * (n * k)
    black = [0] * (n * k)
    for e in range(n):
        for j in range(k):
            idx = e * k + j
            white[idx] = idx + 1 if j < k - 1 else tree.white[e] * k
            black[idx] = tree.black[e] * k if j == 0 else idx
    return PlaneTree(n * k, tuple(white), tuple(black))


class PowerBase(NamedTuple):
    k: int
    base: PlaneTree
    # a one-edge base has polynomial of degree 1, which has no critical values
    degenerate: bool


def power_bases(tree: PlaneTree) -> list[PowerBase]:
    """Every (k, base) with ``power_lift(base, k)`` isotopic to ``tree``."""
    n = tree.n
    p = tree.passport
    key = canonical_form(tree)
    out = []
    for k in divisors(n):
        if k < 2:
            continue
        if any(v % k for v in p.white):
            continue
        want_white = tuple(v // k for v in p.white)
        for base in all_classes(n // k):
            if base.passport.white != want_white:
                continue
            if canonical_form(power_lift(base, k)) == key:
                out.append(PowerBase(k, base, base.n == 1))
    return out


@dataclass(frozen=True)
class InvariantVector:
    aut_order: int
    rot_order: int
    primitive: bool
    reductions: tuple[Passport, ...]
    power_bases: tuple[tuple[int, Passport], ...]

    @property
    def reducible(self) -> bool:
        return bool(self.reductions)

    def to_json(self) -> dict:
        return {
            "aut": self.aut_order,
            "rot_order": self.rot_order,
            "primitive": self.primitive,
            "reductions": [str(p) for p in self.reductions],
            "power_bases": [{"k": k, "base": str(b)} for k, b in self.power_bases],
        }


def rotation_group(tree: PlaneTree) -> PermGroup:
    return PermGroup([tree.white, tree.black], tree.n)


def invariant_vector(tree: PlaneTree) -> InvariantVector:
    group = rotation_group(tree)
    reds = sorted(q.passport for d, q in reductions(tree) if d > 1)
    bases = sorted((pb.k, pb.base.passport) for pb in power_bases(tree))
    return InvariantVector(
        aut_order=automorphism_order(tree),
        rot_order=group.order(),
        primitive=group.is_primitive(),
        reductions=tuple(reds),
        power_bases=tuple(bases),
    )
