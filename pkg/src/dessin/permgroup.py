"""Small-degree permutation groups: exact order, transitivity, primitivity.

Permutations are image tuples on ``{0..degree-1}``.  The order comes from a
deterministic Schreier-Sims stabilizer chain built once at construction.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

from .tree import compose, inverse


class NotTransitive(ValueError):
    pass


def _identity(n):
    return tuple(range(n))


class _Level:
    """One stabilizer-chain level: base point, strong generators, transversal."""

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        # point -> element mapping base to point
        self.transversal: dict[int, tuple[int, ...]] = {base: _identity(degree)}

    def extend_orbit(self):
        queue = list(self.transversal)
        while queue:
            pt = queue.pop()
            u = self.transversal[pt]
            for g in self.gens:
                img = g[pt]
                if img not in self.transversal:
                    self.transversal[img] = compose(u, g)
                    queue.append(img)


class PermGroup:
    def __init__(self, generators: Sequence[Sequence[int]], degree: int | None = None):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = len(gens[0])
        self.degree = degree
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        ident = _identity(degree)
        self.generators = [g for g in gens if g != ident]
        self._levels: list[_Level] = []
        for g in self.generators:
            self._add(g, 0)

    def _sift(self, g, start: int):
        for i in range(start, len(self._levels)):
            lev = self._levels[i]
            img = g[lev.base]
            u = lev.transversal.get(img)
            if u is None:
                return g, i
            g = compose(g, inverse(u))
        return g, len(self._levels)

    def _add(self, g, depth: int):
        """Make ``g`` a member of the chain from level ``depth`` downwards.

        A sifted residue ``h`` becomes a strong generator at every level whose
        base points it fixes; Schreier generators for new (point, generator)
        pairs are then pushed one level down.
        """
        h, j = self._sift(g, depth)
        if h == _identity(self.degree):
            return
        if j == len(self._levels):
            moved = next(p for p in range(self.degree) if h[p] != p)
            self._levels.append(_Level(moved, self.degree))
        for lev in self._levels[depth:j + 1]:
            lev.gens.append(h)
        for i in range(j, depth - 1, -1):
            lev = self._levels[i]
            old = set(lev.transversal)
            lev.extend_orbit()
            for pt, u in list(lev.transversal.items()):
                for s in lev.gens:
                    if pt in old and s is not h:
                        continue
                    schreier = compose(compose(u, s), inverse(lev.transversal[s[pt]]))
                    self._add(schreier, i + 1)

    def order(self) -> int:
        return prod(len(lev.transversal) for lev in self._levels)

    def __contains__(self, g) -> bool:
        h, _ = self._sift(tuple(g), 0)
        return h == _identity(self.degree)

    @property
    def base(self) -> list[int]:
        return [lev.base for lev in self._levels]

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        stack = [point]
        while stack:
            p = stack.pop()
            for g in self.generators:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return seen

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def minimal_block(self, point: int) -> set[int]:
        """Smallest block containing 0 and ``point`` (union-find closure)."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[ry] = rx
            return True

        union(0, point)
        queue = [(0, point)]
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                gx, gy = g[x], g[y]
                if union(gx, gy):
                    queue.append((gx, gy))
        root = find(0)
        return {x for x in range(self.degree) if find(x) == root}

    def block_systems_through_zero(self) -> list[set[int]]:
        """Distinct minimal blocks containing 0 and some other point."""
        blocks = []
        for p in range(1, self.degree):
            b = self.minimal_block(p)
            if b not in blocks:
                blocks.append(b)
        return blocks

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            raise NotTransitive("primitivity is only defined for transitive groups")
        return all(len(b) == self.degree for b in self.block_systems_through_zero())


def group_order(group: PermGroup) -> int:
    return group.order()


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()


def is_primitive(group: PermGroup) -> bool:
    return group.is_primitive()


def closure_order(generators: Sequence[Sequence[int]], degree: int) -> int:
    """Brute-force group order by breadth-first closure; only for tiny groups."""
    ident = _identity(degree)
    gens = [tuple(g) for g in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)
