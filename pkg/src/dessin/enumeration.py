"""Enumerate plane bicolored trees with a given number of edges.

The face permutation is pinned to the standard cycle ``e -> e+1`` and the
white rotation is built one image at a time.  Each choice ``white[i] = j``
also fixes ``black[j] = i + 1``; both partial permutations are tracked as
disjoint paths, and a branch is cut as soon as more than ``n - 1`` path
merges have happened (a tree needs ``n + 1`` cycles in total, and every
merge destroys one potential cycle).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .tree import (
    Passport,
    PlaneTree,
    automorphism_order,
    canonical_form,
    canonical_tree,
    canonical_white,
    normalize_colors,
    tree_from_key,
)

MAX_EDGES = 12


class BoundExceeded(ValueError):
    pass


def _check_bound(n: int) -> None:
    if not 1 <= n <= MAX_EDGES:
        raise BoundExceeded(f"edge count must be in 1..{MAX_EDGES}, got {n}")


def white_rotations(n: int, first: int | None = None) -> list[tuple[int, ...]]:
    """All white rotations ``a`` making ``(a, sigma a^-1)`` a tree, sigma standard.

    With ``first`` given only rotations with ``a[0] == first`` are returned,
    which lets callers split the search.
    """
    _check_bound(n)
    a = [-1] * n
    used = [False] * n
    # head/tail bookkeeping of the partial permutations as disjoint paths:
    # a_head[t] is the head of the path ending at t, a_tail[h] the tail of
    # the path starting at h.  Same for b.
    a_head = list(range(n))
    a_tail = list(range(n))
    b_head = list(range(n))
    b_tail = list(range(n))
    budget = n - 1
    out = []

    def extend(i, merges):
        if i == n:
            out.append(tuple(a))
            return
        nxt = (i + 1) % n
        choices = range(n) if (i > 0 or first is None) else (first,)
        for j in choices:
            if used[j]:
                continue
            h1, t1 = a_head[i], a_tail[j]
            merge_a = h1 != j
            if merge_a:
                a_head[t1] = h1
                a_tail[h1] = t1
            h2, t2 = b_head[j], b_tail[nxt]
            merge_b = h2 != nxt
            if merge_b:
                b_head[t2] = h2
                b_tail[h2] = t2
            m = merges + merge_a + merge_b
            if m <= budget:
                a[i] = j
                used[j] = True
                extend(i + 1, m)
                used[j] = False
            if merge_b:
                b_head[t2] = nxt
                b_tail[h2] = j
            if merge_a:
                a_head[t1] = j
                a_tail[h1] = i

    extend(0, 0)
    return out


def _classes_for_first(args):
    n, first = args
    keys = set()
    for a in white_rotations(n, first):
        tree = PlaneTree.from_sigma_and_white(a)
        if canonical_white(tree) == a:
            keys.add(canonical_form(tree))
    return keys


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("DESSIN_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=None)
def _class_keys(n: int) -> tuple[bytes, ...]:
    _check_bound(n)
    jobs = [(n, j) for j in range(n)]
    workers = min(_thread_count(), n)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_classes_for_first, jobs))
    else:
        parts = [_classes_for_first(job) for job in jobs]
    return tuple(sorted(set().union(*parts)))


def all_classes(n: int) -> list[PlaneTree]:
    """One canonical representative per isotopy class, both colourings included."""
    return [tree_from_key(k) for k in _class_keys(n)]


@dataclass
class TypeBucket:
    passport: Passport
    trees: list[PlaneTree] = field(default_factory=list)

    @property
    def weighted_sum(self) -> Fraction:
        return weighted_sum(self)

    def __len__(self):
        return len(self.trees)


def bucket_sort_key(p: Passport):
    return (p.white, p.black)


def enumerate_trees(n: int, passport: Passport | None = None) -> list[TypeBucket]:
    """Types of n-edge trees in table order, colours normalized.

    A class whose white list is lexicographically lower than its black list is
    stored colour-swapped.  Trees inside a bucket are sorted by canonical key.
    """
    _check_bound(n)
    target = passport.normalized() if passport is not None else None
    if target is not None and target.n != n:
        raise ValueError(f"passport {target} has {target.n} edges, not {n}")
    buckets: dict[Passport, dict[bytes, PlaneTree]] = {}
    for tree in all_classes(n):
        norm = normalize_colors(tree)
        p = norm.passport
        if target is not None and p != target:
            continue
        key = canonical_form(norm)
        buckets.setdefault(p, {})[key] = norm
    out = []
    for p in sorted(buckets, key=bucket_sort_key, reverse=True):
        trees = [canonical_tree(buckets[p][k]) for k in sorted(buckets[p])]
        out.append(TypeBucket(p, trees))
    return out


def goulden_jackson(p: Passport) -> Fraction:
    """Weighted tree count of a type from its passport alone."""
    m, nb = len(p.white), len(p.black)
    k = Counter(p.white).values()
    l = Counter(p.black).values()
    num = factorial(m - 1) * factorial(nb - 1)
    den = prod(factorial(x) for x in k) * prod(factorial(x) for x in l)
    return Fraction(num, den)


def weighted_sum(bucket: TypeBucket) -> Fraction:
    return sum((Fraction(1, automorphism_order(t)) for t in bucket.trees), Fraction(0))


def partitions(n: int, max_part: int | None = None):
    """Integer partitions of n as nonincreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def all_passports(n: int, normalized: bool = True) -> list[Passport]:
    """Every passport of an n-edge tree (each is realized by at least one tree)."""
    parts = list(partitions(n))
    out = []
    for w in parts:
        for b in parts:
            if len(w) + len(b) != n + 1:
                continue
            p = Passport(w, b)
            if normalized and p.white < p.black:
                continue
            out.append(p)
    return sorted(out, key=bucket_sort_key, reverse=True)
