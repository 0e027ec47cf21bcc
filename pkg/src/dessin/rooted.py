"""Second, independent enumeration of plane bicolored trees.

Ordered rooted trees (root coloured white) are generated directly as nested
tuples; each one is a plane tree with a marked white corner.  Re-rooting at
every white corner and keeping the smallest bracket code identifies the
isotopy class without touching the permutation machinery.  Used to
cross-check :mod:`dessin.enumeration`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .tree import Passport, PlaneTree


@lru_cache(maxsize=None)
def ordered_forests(edges: int) -> tuple[tuple, ...]:
    """All ordered forests with the given total number of edges.

    A forest is a tuple of trees and a tree is the tuple of its subtrees, so
    every tree in a forest contributes one edge to its parent.
    """
    if edges == 0:
        return ((),)
    out = []
    for first in range(1, edges + 1):
        for head in ordered_forests(first - 1):
            for tail in ordered_forests(edges - first):
                out.append((head,) + tail)
    return tuple(out)


def ordered_trees(n: int) -> tuple[tuple, ...]:
    """Ordered rooted trees with n edges; the root's children are the forest."""
    return ordered_forests(n)


def rotation_system(tree: tuple):
    """Neighbour lists (counterclockwise) and colours of an ordered tree."""
    rotation: dict[int, list[int]] = {0: []}
    white = {0}
    stack = [(0, tree)]
    next_id = 1
    while stack:
        v, children = stack.pop()
        for child in children:
            c = next_id
            next_id += 1
            rotation[v].append(c)
            rotation[c] = [v]
            if v not in white:
                white.add(c)
            stack.append((c, child))
    return rotation, white


def _code(rotation, v, parent, start):
    nbrs = rotation[v]
    k = len(nbrs)
    if parent is None:
        order = [nbrs[(start + i) % k] for i in range(k)]
    else:
        i0 = nbrs.index(parent)
        order = [nbrs[(i0 + i) % k] for i in range(1, k)]
    return "(" + "".join(_code(rotation, u, v, 0) for u in order) + ")"


def rooting_codes(rotation, white) -> set[str]:
    """Bracket codes of every re-rooting at a white corner."""
    return {
        _code(rotation, v, None, i)
        for v in white
        for i in range(len(rotation[v]))
    }


@dataclass
class RootedClass:
    code: str
    rotation: dict
    white: set
    rootings: int

    @property
    def passport(self) -> Passport:
        w = [len(self.rotation[v]) for v in self.rotation if v in self.white]
        b = [len(self.rotation[v]) for v in self.rotation if v not in self.white]
        return Passport(tuple(w), tuple(b))

    @property
    def automorphism_order(self) -> int:
        n = sum(len(nb) for v, nb in self.rotation.items() if v in self.white)
        return n // self.rootings

    def plane_tree(self) -> PlaneTree:
        return PlaneTree.from_embedding(self.rotation, self.white)


def rooted_classes(n: int) -> list[RootedClass]:
    """Isotopy classes of n-edge trees (both colourings), keyed by minimal code."""
    classes: dict[str, RootedClass] = {}
    for t in ordered_trees(n):
        rotation, white = rotation_system(t)
        codes = rooting_codes(rotation, white)
        key = min(codes)
        if key not in classes:
            classes[key] = RootedClass(key, rotation, white, len(codes))
    return [classes[k] for k in sorted(classes)]


def rooted_buckets(n: int) -> dict[Passport, list[RootedClass]]:
    """Classes grouped by passport, keeping only white-lexicographically-higher colourings."""
    out: dict[Passport, list[RootedClass]] = {}
    for c in rooted_classes(n):
        p = c.passport
        if p.white < p.black:
            continue
        out.setdefault(p, []).append(c)
    return out


def rooting_census(n: int) -> Counter:
    """Passport -> number of rooted trees; equals n * weighted count per type."""
    census: Counter = Counter()
    for t in ordered_trees(n):
        rotation, white = rotation_system(t)
        census[RootedClass("", rotation, white, 1).passport] += 1
    return census
