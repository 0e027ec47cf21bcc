"""Reference data for ten-edge trees: the type table and the orbit structure.

Passports are written ``white|black`` with the white list lexicographically
higher.  Orbit records carry only what is asserted about each orbit; a field
left as ``None`` means no claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..tree import Passport

TABLE = [
    (1, "10|1,1,1,1,1,1,1,1,1,1", "1/10"),
    (2, "9,1|2,1,1,1,1,1,1,1,1", "1"),
    (3, "8,2|2,1,1,1,1,1,1,1,1", "1"),
    (4, "8,1,1|3,1,1,1,1,1,1,1", "1"),
    (5, "8,1,1|2,2,1,1,1,1,1,1", "7/2"),
    (6, "7,3|2,1,1,1,1,1,1,1,1", "1"),
    (7, "7,2,1|3,1,1,1,1,1,1,1", "2"),
    (8, "7,2,1|2,2,1,1,1,1,1,1", "7"),
    (9, "7,1,1,1|4,1,1,1,1,1,1", "1"),
    (10, "7,1,1,1|3,2,1,1,1,1,1", "6"),
    (11, "7,1,1,1|2,2,2,1,1,1,1", "5"),
    (12, "6,4|2,1,1,1,1,1,1,1,1", "1"),
    (13, "6,3,1|3,1,1,1,1,1,1,1", "2"),
    (14, "6,3,1|2,2,1,1,1,1,1,1", "7"),
    (15, "6,2,2|3,1,1,1,1,1,1,1", "1"),
    (16, "6,2,2|2,2,1,1,1,1,1,1", "7/2"),
    (17, "6,2,1,1|4,1,1,1,1,1,1", "3"),
    (18, "6,2,1,1|3,2,1,1,1,1,1", "18"),
    (19, "6,2,1,1|2,2,2,1,1,1,1", "15"),
    (20, "6,1,1,1,1|5,1,1,1,1,1", "1"),
    (21, "6,1,1,1,1|4,2,1,1,1,1", "5"),
    (22, "6,1,1,1,1|3,3,1,1,1,1", "5/2"),
    (23, "6,1,1,1,1|3,2,2,1,1,1", "10"),
    (24, "6,1,1,1,1|2,2,2,2,1,1", "5/2"),
    (25, "5,5|2,1,1,1,1,1,1,1,1", "1/2"),
    (26, "5,4,1|3,1,1,1,1,1,1,1", "2"),
    (27, "5,4,1|2,2,1,1,1,1,1,1", "7"),
    (28, "5,3,2|3,1,1,1,1,1,1,1", "2"),
    (29, "5,3,2|2,2,1,1,1,1,1,1", "7"),
    (30, "5,3,1,1|4,1,1,1,1,1,1", "3"),
    (31, "5,3,1,1|3,2,1,1,1,1,1", "18"),
    (32, "5,3,1,1|2,2,2,1,1,1,1", "15"),
    (33, "5,2,2,1|4,1,1,1,1,1,1", "3"),
    (34, "5,2,2,1|3,2,1,1,1,1,1", "18"),
    (35, "5,2,2,1|2,2,2,1,1,1,1", "15"),
    (36, "5,2,1,1,1|5,1,1,1,1,1", "4"),
    (37, "5,2,1,1,1|4,2,1,1,1,1", "20"),
    (38, "5,2,1,1,1|3,3,1,1,1,1", "10"),
    (39, "5,2,1,1,1|3,2,2,1,1,1", "40"),
    (40, "5,2,1,1,1|2,2,2,2,1,1", "10"),
    (41, "5,1,1,1,1,1|4,3,1,1,1", "4"),
    (42, "5,1,1,1,1,1|4,2,2,1,1", "6"),
    (43, "5,1,1,1,1,1|3,3,2,1,1", "6"),
    (44, "5,1,1,1,1,1|3,2,2,2,1", "4"),
    (45, "5,1,1,1,1,1|2,2,2,2,2", "1/5"),
    (46, "4,4,2|3,1,1,1,1,1,1,1", "1"),
    (47, "4,4,2|2,2,1,1,1,1,1,1", "7/2"),
    (48, "4,4,1,1|4,1,1,1,1,1,1", "3/2"),
    (49, "4,4,1,1|3,2,1,1,1,1,1", "9"),
    (50, "4,4,1,1|2,2,2,1,1,1,1", "15/2"),
    (51, "4,3,3|3,1,1,1,1,1,1,1", "1"),
    (52, "4,3,3|2,2,1,1,1,1,1,1", "7/2"),
    (53, "4,3,2,1|4,1,1,1,1,1,1", "6"),
    (54, "4,3,2,1|3,2,1,1,1,1,1", "36"),
    (55, "4,3,2,1|2,2,2,1,1,1,1", "30"),
    (56, "4,3,1,1,1|4,2,1,1,1,1", "20"),
    (57, "4,3,1,1,1|3,3,1,1,1,1", "10"),
    (58, "4,3,1,1,1|3,2,2,1,1,1", "40"),
    (59, "4,3,1,1,1|2,2,2,2,1,1", "10"),
    (60, "4,2,2,2|4,1,1,1,1,1,1", "1"),
    (61, "4,2,2,2|3,2,1,1,1,1,1", "6"),
    (62, "4,2,2,2|2,2,2,1,1,1,1", "5"),
    (63, "4,2,2,1,1|4,2,1,1,1,1", "30"),
    (64, "4,2,2,1,1|3,3,1,1,1,1", "15"),
    (65, "4,2,2,1,1|3,2,2,1,1,1", "60"),
    (66, "4,2,2,1,1|2,2,2,2,1,1", "15"),
    (67, "4,2,1,1,1,1|3,3,2,1,1", "30"),
    (68, "4,2,1,1,1,1|3,2,2,2,1", "20"),
    (69, "4,2,1,1,1,1|2,2,2,2,2", "1"),
    (70, "4,1,1,1,1,1,1|3,3,3,1", "1"),
    (71, "4,1,1,1,1,1,1|3,3,2,2", "3/2"),
    (72, "3,3,3,1|3,2,1,1,1,1,1", "6"),
    (73, "3,3,3,1|2,2,2,1,1,1,1", "5"),
    (74, "3,3,2,2|3,2,1,1,1,1,1", "9"),
    (75, "3,3,2,2|2,2,2,1,1,1,1", "15/2"),
    (76, "3,3,2,1,1|3,3,1,1,1,1", "15"),
    (77, "3,3,2,1,1|3,2,2,1,1,1", "60"),
    (78, "3,3,2,1,1|2,2,2,2,1,1", "15"),
    (79, "3,3,1,1,1,1|3,2,2,2,1", "10"),
    (80, "3,3,1,1,1,1|2,2,2,2,2", "1/2"),
    (81, "3,2,2,2,1|3,2,2,1,1,1", "40"),
    (82, "3,2,2,2,1|2,2,2,2,1,1", "10"),
    (83, "3,2,2,1,1,1|2,2,2,2,2", "2"),
    (84, "2,2,2,2,2|2,2,2,2,1,1", "1/2"),
]


@dataclass(frozen=True)
class PaperRow:
    index: int
    passport: Passport
    w: Fraction


ROWS: dict[int, PaperRow] = {
    i: PaperRow(i, Passport.parse(p), Fraction(w)) for i, p, w in TABLE
}


@dataclass(frozen=True)
class Orbit:
    """One Galois orbit and the invariants asserted for it."""

    size: int
    aut: int = 1
    rot_order: int | None = None
    # edge counts of path trees the orbit's trees reduce to
    reduces_to_chain: tuple[int, ...] = ()
    # (k, base passport) pairs; () asserts the trees are not powers
    power: tuple[tuple[int, str], ...] | None = None
    primitive: bool | None = None
    rational: bool = False


@dataclass(frozen=True)
class OrbitExpectation:
    index: int
    # short label for the group of claims this record comes from
    kind: str
    orbits: tuple[Orbit, ...]
    nontrivial: bool = False

    @property
    def tree_count(self) -> int:
        return sum(o.size for o in self.orbits)

    @property
    def weight(self) -> Fraction:
        return sum((Fraction(o.size, o.aut) for o in self.orbits), Fraction(0))


def _single_symmetric(index, aut):
    return OrbitExpectation(index, "single symmetric tree", (Orbit(1, aut=aut),))


def _one_sym_plus(index, rest):
    return OrbitExpectation(index, "one symmetric tree", (Orbit(1, aut=2), Orbit(rest, rational=rest == 1)))


NON_DECOMPOSABLE = (
    [2, 3, 4] + list(range(6, 16)) + list(range(17, 22)) + [23] + list(range(26, 33))
    + list(range(34, 43)) + [44, 46, 49, 51] + list(range(53, 61)) + [62, 63, 65]
    + list(range(67, 71)) + [72, 73, 74, 77, 79, 81, 82]
)

_EXPECTATIONS: list[OrbitExpectation] = [
    _single_symmetric(1, 10),
    _single_symmetric(25, 2),
    _single_symmetric(45, 5),
    _single_symmetric(80, 2),
    _single_symmetric(84, 2),
    _one_sym_plus(5, 3),
    _one_sym_plus(22, 2),
    _one_sym_plus(24, 2),
    _one_sym_plus(48, 1),
    _one_sym_plus(52, 3),
    _one_sym_plus(71, 1),
    OrbitExpectation(64, "two symmetric trees", (Orbit(2, aut=2), Orbit(14))),
    OrbitExpectation(66, "two symmetric trees", (Orbit(2, aut=2), Orbit(14))),
    OrbitExpectation(76, "two symmetric trees", (Orbit(2, aut=2), Orbit(14))),
    OrbitExpectation(78, "two symmetric trees", (Orbit(2, aut=2), Orbit(14))),
    OrbitExpectation(75, "three symmetric trees", (Orbit(3, aut=2), Orbit(6))),
    OrbitExpectation(16, "square of a five-edge tree", (
        Orbit(2, rot_order=14400, reduces_to_chain=(2,), power=()),
        Orbit(1, aut=2, rot_order=240, power=()),
        Orbit(1, rot_order=7200, reduces_to_chain=(2,), power=((2, "3,1,1|2,2,1"),), rational=True),
    )),
    OrbitExpectation(47, "square of the five-chain", (
        Orbit(2, rot_order=14400, reduces_to_chain=(2,), power=()),
        Orbit(1, aut=2, rot_order=240, power=()),
        Orbit(1, rot_order=200, reduces_to_chain=(2,), power=((2, "2,2,1|2,2,1"),), rational=True),
    )),
    OrbitExpectation(61, "square root recovered", (
        Orbit(5, rot_order=28800, reduces_to_chain=(2,), power=()),
        Orbit(1, rot_order=28800, reduces_to_chain=(2,), power=((2, "2,1,1,1|3,2"),), rational=True),
    )),
    OrbitExpectation(33, "non-trivial decomposition", (
        Orbit(2, rot_order=3628800),
        Orbit(1, rot_order=3628800, rational=True),
    ), nontrivial=True),
    OrbitExpectation(43, "non-trivial decomposition", (
        Orbit(5, rot_order=3628800),
        Orbit(1, rot_order=3628800, rational=True),
    ), nontrivial=True),
    OrbitExpectation(50, "primitive special tree", (
        Orbit(3, aut=2, rot_order=3840),
        Orbit(1, rot_order=1440, primitive=True, rational=True),
        Orbit(5, rot_order=3628800),
    )),
    OrbitExpectation(83, "two rational trees", (
        Orbit(1, rot_order=14400, rational=True),
        Orbit(1, rot_order=7200, rational=True),
    )),
] + [
    # one orbit holding every tree, none of them symmetric
    OrbitExpectation(i, "non-decomposable", (Orbit(int(ROWS[i].w)),))
    for i in NON_DECOMPOSABLE
]

EXPECTATIONS: dict[int, OrbitExpectation] = {e.index: e for e in _EXPECTATIONS}

NONTRIVIAL_TYPES = frozenset(i for i, e in EXPECTATIONS.items() if e.nontrivial)


@dataclass(frozen=True)
class PaperPolynomial:
    """A printed Shabat polynomial and what it is claimed to be."""

    type_index: int
    label: str
    text: str
    # the printed expression is the integrand; the polynomial is its antiderivative
    integral: bool = False
    # printed q with text == q**k
    power_of: tuple[int, str] | None = None
    # base passport of q when q itself is not printed
    sqrt_base: str | None = None
    # verbatim form when ``text`` repairs a typographical slip
    printed: str | None = None


POLYNOMIALS: list[PaperPolynomial] = [
    PaperPolynomial(48, "rational non-symmetric tree", "(x^2+100/27)^4*(x^2+100/27*x+100/27)"),
    PaperPolynomial(71, "rational non-symmetric tree", "(x^2+6075/5476)^3*(x^2+2025/592*x+2025/592)^2"),
    PaperPolynomial(16, "T4", "x^6*(x^2-2*x+32/5)^2", power_of=(2, "x^3*(x^2-2*x+32/5)")),
    PaperPolynomial(47, "rational tree", "(x^2-1/5)^4*(x-1)^2", power_of=(2, "(x^2-1/5)^2*(x-1)")),
    PaperPolynomial(61, "rational tree", "x^4*(x^3+5/9*x^2-5/81*x-5/81)^2", sqrt_base="2,1,1,1|3,2"),
    PaperPolynomial(
        33, "rational tree", "x^5*(x^2-27/16*x+27/32)^2*(x-1)",
        printed="x^5*(x^2-27/16+27/32)^2*(x-1)",
    ),
    PaperPolynomial(43, "rational tree", "x^4*(x-1)*(x^2+2*x+2)^2", integral=True),
    PaperPolynomial(50, "special tree", "(x^2-500/441)^4*(x^2+500*x/189+500/189)"),
    PaperPolynomial(83, "T1", "(3*x+20)^3*(3*x-10)^2*(x-10)^2*(3*x^3+20*x^2-400*x-4000)"),
    PaperPolynomial(83, "T2", "(60*x-7)^3*(1200*x^2+280*x+343)^2*(100*x^2+35*x+49)*(15*x-7)"),
]
