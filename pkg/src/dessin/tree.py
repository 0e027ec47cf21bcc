"""Plane bicolored trees encoded as a pair of edge permutations.

A tree with ``n`` edges is stored as two image arrays on ``{0..n-1}``:
``white[e]`` is the next edge counterclockwise around the white end of
``e`` and ``black[e]`` the same around the black end.  The face
permutation is ``sigma = black o white`` (white applied first); the pair
describes a plane tree exactly when ``sigma`` is a single n-cycle and the
two rotations have ``n + 1`` cycles between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class TreeError(ValueError):
    pass


class NotAPermutation(TreeError):
    pass


class NotConnectedSingleFace(TreeError):
    pass


class WrongGenus(TreeError):
    pass


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Return ``q o p``: apply ``p`` first, then ``q``."""
    return tuple(q[i] for i in p)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(cyc)
    return out


def cycle_count(p: Sequence[int]) -> int:
    return len(cycles(p))


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(cyc: Iterable[Iterable[int]], n: int) -> tuple[int, ...]:
    """Image array of the permutation given by disjoint cycles (0-indexed)."""
    p = list(range(n))
    for c in cyc:
        c = list(c)
        for i, x in enumerate(c):
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)


@dataclass(frozen=True, order=True)
class Passport:
    """White and black valency lists, each nonincreasing."""

    white: tuple[int, ...]
    black: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "white", tuple(sorted(self.white, reverse=True)))
        object.__setattr__(self, "black", tuple(sorted(self.black, reverse=True)))
        if sum(self.white) != sum(self.black):
            raise ValueError(f"valency sums differ: {self.white} vs {self.black}")
        if len(self.white) + len(self.black) != sum(self.white) + 1:
            raise ValueError(f"not a tree passport: {self.white} | {self.black}")
        if min(self.white + self.black) < 1:
            raise ValueError("valencies must be positive")

    @property
    def n(self) -> int:
        return sum(self.white)

    def swapped(self) -> "Passport":
        return Passport(self.black, self.white)

    def normalized(self) -> "Passport":
        """Colors arranged so the white list is lexicographically >= black."""
        if self.white < self.black:
            return self.swapped()
        return self

    @classmethod
    def parse(cls, text: str) -> "Passport":
        """Parse ``"5,3,1,1|4,1,1,1,1,1,1"``."""
        try:
            w, b = text.split("|")
            white = tuple(int(x) for x in w.split(","))
            black = tuple(int(x) for x in b.split(","))
        except ValueError:
            raise ValueError(f"bad passport string {text!r}; expected e.g. '3,1|2,1,1'") from None
        return cls(white, black)

    def __str__(self):
        return ",".join(map(str, self.white)) + "|" + ",".join(map(str, self.black))


@dataclass(frozen=True)
class PlaneTree:
    n: int
    white: tuple[int, ...]
    black: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "white", tuple(self.white))
        object.__setattr__(self, "black", tuple(self.black))
        check_tree(self.n, self.white, self.black)

    @property
    def sigma(self) -> tuple[int, ...]:
        return compose(self.white, self.black)

    @property
    def passport(self) -> Passport:
        return Passport(cycle_type(self.white), cycle_type(self.black))

    def to_json(self) -> dict:
        return {"n": self.n, "white": list(self.white), "black": list(self.black)}

    @classmethod
    def from_json(cls, data: dict) -> "PlaneTree":
        return validate(int(data["n"]), data["white"], data["black"])

    @classmethod
    def from_sigma_and_white(cls, white: Sequence[int]) -> "PlaneTree":
        """Tree whose face permutation is the standard cycle ``e -> e+1``."""
        n = len(white)
        std = tuple((i + 1) % n for i in range(n))
        return cls(n, tuple(white), compose(inverse(white), std))

    @classmethod
    def from_embedding(cls, rotation: dict, white_vertices: Iterable) -> "PlaneTree":
        """Build a tree from a rotation system.

        ``rotation`` maps each vertex to its neighbours listed counterclockwise;
        ``white_vertices`` names the white colour class.  Edges are numbered in
        the order they are first met scanning white vertices in iteration order.
        """
        white_set = set(white_vertices)
        edge_ids: dict = {}
        for v in rotation:
            if v not in white_set:
                continue
            for u in rotation[v]:
                if u in white_set:
                    raise TreeError(f"adjacent vertices {v!r}, {u!r} share a colour")
                edge_ids[(v, u)] = len(edge_ids)
        n = len(edge_ids)
        white = [0] * n
        black = [0] * n
        for v, nbrs in rotation.items():
            k = len(nbrs)
            for i, u in enumerate(nbrs):
                nxt = nbrs[(i + 1) % k]
                if v in white_set:
                    white[edge_ids[(v, u)]] = edge_ids[(v, nxt)]
                else:
                    black[edge_ids[(u, v)]] = edge_ids[(nxt, v)]
        return validate(n, white, black)


def check_tree(n: int, white: Sequence[int], black: Sequence[int]) -> None:
    if n < 1:
        raise NotAPermutation(f"edge count must be positive, got {n}")
    if not is_permutation(white, n):
        raise NotAPermutation(f"white rotation {list(white)} is not a permutation of 0..{n - 1}")
    if not is_permutation(black, n):
        raise NotAPermutation(f"black rotation {list(black)} is not a permutation of 0..{n - 1}")
    sigma = compose(white, black)
    if cycle_count(sigma) != 1:
        raise NotConnectedSingleFace(f"face permutation has cycle type {cycle_type(sigma)}")
    c = cycle_count(white) + cycle_count(black)
    if c != n + 1:
        raise WrongGenus(f"rotations have {c} cycles in total, a tree needs {n + 1}")


def validate(n: int, white_images: Sequence[int], black_images: Sequence[int]) -> PlaneTree:
    try:
        white = tuple(int(x) for x in white_images)
        black = tuple(int(x) for x in black_images)
    except (TypeError, ValueError):
        raise NotAPermutation("image arrays must contain integers") from None
    return PlaneTree(n, white, black)


def passport_of(tree: PlaneTree) -> Passport:
    return tree.passport


def _standard_white(tree: PlaneTree, start: int) -> tuple[int, ...]:
    # relabel sigma^i(start) -> i so that sigma becomes e -> e+1
    n = tree.n
    sigma = tree.sigma
    order = [start]
    for _ in range(n - 1):
        order.append(sigma[order[-1]])
    label = [0] * n
    for i, e in enumerate(order):
        label[e] = i
    return tuple(label[tree.white[e]] for e in order)


def standard_forms(tree: PlaneTree) -> list[tuple[int, ...]]:
    """White rotations of all n relabelings that make sigma standard."""
    return [_standard_white(tree, s) for s in range(tree.n)]


def canonical_white(tree: PlaneTree) -> tuple[int, ...]:
    return min(standard_forms(tree))


def canonical_form(tree: PlaneTree) -> bytes:
    """Isotopy-class key: edge count followed by the minimal standard white rotation."""
    if tree.n > 255:
        raise ValueError("canonical keys are byte-encoded; n must be <= 255")
    return bytes((tree.n,) + canonical_white(tree))


def canonical_tree(tree: PlaneTree) -> PlaneTree:
    return PlaneTree.from_sigma_and_white(canonical_white(tree))


def tree_from_key(key: bytes) -> PlaneTree:
    n, white = key[0], tuple(key[1:])
    if len(white) != n:
        raise ValueError("malformed canonical key")
    return PlaneTree.from_sigma_and_white(white)


def isotopic(s: PlaneTree, t: PlaneTree) -> bool:
    return canonical_form(s) == canonical_form(t)


def automorphism_order(tree: PlaneTree) -> int:
    """Number of powers of sigma commuting with the white rotation."""
    n = tree.n
    a = _standard_white(tree, 0)
    return sum(
        1 for k in range(n) if all(a[(i + k) % n] == (a[i] + k) % n for i in range(n))
    )


def color_swap(tree: PlaneTree) -> PlaneTree:
    return PlaneTree(tree.n, tree.black, tree.white)


def normalize_colors(tree: PlaneTree) -> PlaneTree:
    p = tree.passport
    if p.white < p.black:
        return color_swap(tree)
    return tree


def conjugate(tree: PlaneTree, pi: Sequence[int]) -> PlaneTree:
    """Relabel edge ``e`` as ``pi[e]`` in both rotations."""
    inv = inverse(pi)
    white = tuple(pi[tree.white[inv[e]]] for e in range(tree.n))
    black = tuple(pi[tree.black[inv[e]]] for e in range(tree.n))
    return PlaneTree(tree.n, white, black)


def star(n: int) -> PlaneTree:
    """White vertex of valency n with n black leaves."""
    return PlaneTree(n, tuple((i + 1) % n for i in range(n)), tuple(range(n)))


def chain(n: int) -> PlaneTree:
    """Path with n edges, starting at a white end."""
    verts = list(range(n + 1))
    rotation = {}
    for v in verts:
        nbrs = [u for u in (v - 1, v + 1) if 0 <= u <= n]
        rotation[v] = nbrs
    return PlaneTree.from_embedding(rotation, [v for v in verts if v % 2 == 0])
