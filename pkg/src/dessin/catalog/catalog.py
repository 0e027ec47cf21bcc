"""Regenerate the ten-edge catalog and compare it with the reference data."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from ..enumeration import enumerate_trees
from ..invariants import InvariantVector, invariant_vector
from ..poly import (
    NotASquare,
    ShabatCertificate,
    ShabatError,
    parse_poly,
    poly_sqrt,
    verify_power,
    verify_shabat,
)
from ..tree import Passport, PlaneTree, canonical_form, chain
from .paperdata import EXPECTATIONS, POLYNOMIALS, ROWS, Orbit, OrbitExpectation, PaperPolynomial

MATCH = "MATCH"
REFINEMENT = "REFINEMENT_BEYOND_INVARIANTS"
MISMATCH = "MISMATCH"
NO_EXPECTATION = "NO_EXPECTATION"


@dataclass
class TreeRecord:
    tree: PlaneTree
    key: bytes
    vector: InvariantVector

    def to_json(self) -> dict:
        out = {"canonical_key": self.key.hex(), "tree": self.tree.to_json()}
        out.update(self.vector.to_json())
        return out


@dataclass
class InvariantClass:
    vector: InvariantVector
    keys: list[bytes]

    @property
    def size(self) -> int:
        return len(self.keys)


@dataclass
class TypeRecord:
    index: Optional[int]
    passport: Passport
    trees: list[TreeRecord]
    w_computed: Fraction
    w_paper: Optional[Fraction] = None
    expected: Optional[OrbitExpectation] = None
    partition: list[InvariantClass] = field(default_factory=list)
    # expected orbit index -> invariant class index
    assignment: Optional[tuple[int, ...]] = None
    status: str = NO_EXPECTATION
    notes: list[str] = field(default_factory=list)

    @property
    def tree_count(self) -> int:
        return len(self.trees)

    def to_json(self) -> dict:
        exp = None
        if self.expected is not None:
            exp = {
                "kind": self.expected.kind,
                "nontrivial_decomposition": self.expected.nontrivial,
                "orbits": [_orbit_json(o) for o in self.expected.orbits],
            }
        return {
            "index": self.index,
            "passport": str(self.passport),
            "w_computed": _fmt(self.w_computed),
            "w_paper": _fmt(self.w_paper) if self.w_paper is not None else None,
            "tree_count": self.tree_count,
            "trees": [t.to_json() for t in self.trees],
            "partition": [
                {"size": c.size, "invariants": c.vector.to_json(), "keys": [k.hex() for k in c.keys]}
                for c in self.partition
            ],
            "expected": exp,
            "assignment": list(self.assignment) if self.assignment is not None else None,
            "status": self.status,
            "notes": list(self.notes),
        }


@dataclass
class CatalogReport:
    n: int
    rows: list[TypeRecord]
    polynomials: list["PolynomialCheck"] = field(default_factory=list)

    def row(self, index: int) -> TypeRecord:
        for r in self.rows:
            if r.index == index:
                return r
        raise KeyError(index)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [r.to_json() for r in self.rows],
            "polynomials": [p.to_json() for p in self.polynomials],
        }


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _orbit_json(o: Orbit) -> dict:
    return {
        "size": o.size,
        "aut": o.aut,
        "rot_order": o.rot_order,
        "reduces_to_chain": list(o.reduces_to_chain),
        "power": None if o.power is None else [{"k": k, "base": b} for k, b in o.power],
        "primitive": o.primitive,
        "rational": o.rational,
    }


def orbit_admits(orbit: Orbit, vector: InvariantVector) -> bool:
    """True when every invariant asserted for the orbit agrees with ``vector``."""
    if orbit.aut != vector.aut_order:
        return False
    if orbit.rot_order is not None and orbit.rot_order != vector.rot_order:
        return False
    if orbit.primitive is not None and orbit.primitive != vector.primitive:
        return False
    for m in orbit.reduces_to_chain:
        # a tree with no valency above 2 is a path, so the passport suffices
        path = chain(m).passport
        if path not in vector.reductions and path.swapped() not in vector.reductions:
            return False
    if orbit.power is not None:
        want = sorted((k, Passport.parse(b)) for k, b in orbit.power)
        if want != list(vector.power_bases):
            return False
    return True


def partition_by_invariants(trees: list[TreeRecord]) -> list[InvariantClass]:
    classes: dict[InvariantVector, list[bytes]] = {}
    for t in trees:
        classes.setdefault(t.vector, []).append(t.key)
    out = [InvariantClass(v, keys) for v, keys in classes.items()]
    out.sort(key=lambda c: (c.vector.aut_order, -c.vector.rot_order, -c.size, c.keys[0]))
    return out


def match_orbits(classes: list[InvariantClass], orbits: tuple[Orbit, ...]):
    """Assign each orbit to an invariant class.

    Returns ``(assignment, exact)``: ``assignment[i]`` is the class holding
    orbit ``i``; ``exact`` is True when each class holds a single orbit.  A
    one-to-one assignment is preferred.  ``(None, False)`` if none exists.
    """
    options = [[j for j, c in enumerate(classes) if orbit_admits(o, c.vector)] for o in orbits]
    best = None
    for choice in product(*options):
        filled = [0] * len(classes)
        for o, j in zip(orbits, choice):
            filled[j] += o.size
        if filled != [c.size for c in classes]:
            continue
        exact = len(set(choice)) == len(choice)
        if exact:
            return tuple(choice), True
        if best is None:
            best = tuple(choice)
    return best, False


def assess(record: TypeRecord) -> None:
    exp = record.expected
    if exp is None:
        record.status = NO_EXPECTATION
        return
    notes = record.notes
    if record.w_paper is not None and record.w_computed != record.w_paper:
        notes.append(f"weighted count {_fmt(record.w_computed)} != table {_fmt(record.w_paper)}")
    if record.tree_count != exp.tree_count:
        notes.append(f"{record.tree_count} trees, expected {exp.tree_count}")
    assignment, exact = match_orbits(record.partition, exp.orbits)
    record.assignment = assignment
    if assignment is None:
        notes.append("invariant classes are not unions of the expected orbits")
    elif exact and exp.nontrivial:
        notes.append("invariants separate the orbits, but the type is listed as non-trivially decomposable")
    elif not exact and not exp.nontrivial:
        notes.append("orbits are finer than the invariant classes")
    if notes:
        record.status = MISMATCH
    elif exact:
        record.status = MATCH
    else:
        record.status = REFINEMENT


def build_catalog(n: int = 10, with_polynomials: bool = True) -> CatalogReport:
    compare = n == 10
    by_passport = {row.passport: row for row in ROWS.values()} if compare else {}
    rows = []
    for pos, bucket in enumerate(enumerate_trees(n), start=1):
        trees = [TreeRecord(t, canonical_form(t), invariant_vector(t)) for t in bucket.trees]
        ref = by_passport.get(bucket.passport)
        record = TypeRecord(
            index=ref.index if ref else (None if compare else pos),
            passport=bucket.passport,
            trees=trees,
            w_computed=bucket.weighted_sum,
            w_paper=ref.w if ref else None,
            expected=EXPECTATIONS.get(ref.index) if ref else None,
        )
        record.partition = partition_by_invariants(trees)
        if compare and ref is None:
            record.status = MISMATCH
            record.notes.append("passport absent from the reference table")
        else:
            assess(record)
        rows.append(record)
    rows.sort(key=lambda r: (r.index is None, r.index or 0))
    polys = verify_paper_polynomials() if (compare and with_polynomials) else []
    return CatalogReport(n, rows, polys)


@dataclass
class Discrepancy:
    kind: str
    row: Optional[int]
    field: str
    computed: object
    expected: object

    def __str__(self):
        where = f"row {self.row}" if self.row is not None else "catalog"
        return f"{self.kind} at {where} [{self.field}]: computed {self.computed}, expected {self.expected}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "row": self.row,
            "field": self.field,
            "computed": str(self.computed),
            "expected": str(self.expected),
        }


def compare_with_paper(report: CatalogReport) -> list[Discrepancy]:
    """Differences between a ten-edge report and the reference table and orbits."""
    out = []
    present = {r.passport for r in report.rows}
    for row in ROWS.values():
        if row.passport not in present:
            out.append(Discrepancy("MissingType", row.index, "passport", None, str(row.passport)))
    for r in report.rows:
        ref = ROWS.get(r.index) if r.index is not None else None
        if ref is None or ref.passport != r.passport:
            out.append(Discrepancy("ExtraType", r.index, "passport", str(r.passport), None))
            continue
        if r.w_computed != ref.w:
            out.append(Discrepancy("WeightMismatch", r.index, "w", _fmt(r.w_computed), _fmt(ref.w)))
        exp = EXPECTATIONS[r.index]
        if r.tree_count != exp.tree_count:
            out.append(Discrepancy("TreeCountMismatch", r.index, "tree_count", r.tree_count, exp.tree_count))
        want = REFINEMENT if exp.nontrivial else MATCH
        if r.status != want:
            detail = "; ".join(r.notes) if r.notes else r.status
            out.append(Discrepancy("OrbitMismatch", r.index, "status", detail, want))
    for check in report.polynomials:
        if not check.ok:
            out.append(Discrepancy("PolynomialFailure", check.type_index, check.label, check.summary(), "certified"))
    return out


@dataclass
class PolynomialCheck:
    type_index: int
    label: str
    text: str
    certificate: Optional[ShabatCertificate] = None
    failure: Optional[str] = None
    passport_match: bool = False
    power_check: Optional[bool] = None
    power_detail: str = ""
    # outcome for the verbatim printed form, when it differs
    printed: Optional[str] = None
    printed_outcome: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.certificate is not None and self.passport_match and self.power_check is not False

    def summary(self) -> str:
        if self.certificate is None:
            return f"failed: {self.failure}"
        s = f"c={_fmt(self.certificate.c)} passport {self.certificate.passport}"
        if not self.passport_match:
            s += " (does not match the type)"
        if self.power_check is not None:
            s += f"; {self.power_detail}"
        return s

    def to_json(self) -> dict:
        return {
            "type": self.type_index,
            "label": self.label,
            "text": self.text,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "failure": self.failure,
            "passport_match": self.passport_match,
            "power_check": self.power_check,
            "power_detail": self.power_detail,
            "printed": self.printed,
            "printed_outcome": self.printed_outcome,
            "ok": self.ok,
        }


def _certify(text: str, integral: bool):
    p = parse_poly(text)
    if integral:
        p = p.antiderivative()
    return p, verify_shabat(p)


def check_polynomial(entry: PaperPolynomial) -> PolynomialCheck:
    check = PolynomialCheck(entry.type_index, entry.label, entry.text, printed=entry.printed)
    row = ROWS[entry.type_index]
    try:
        p, cert = _certify(entry.text, entry.integral)
    except ShabatError as exc:
        check.failure = f"{type(exc).__name__}: {exc}"
        return check
    check.certificate = cert
    check.passport_match = cert.passport == row.passport
    if entry.power_of is not None:
        k, qtext = entry.power_of
        q = parse_poly(qtext)
        holds = verify_power(p, q, k)
        detail = f"p = q^{k} {'holds' if holds else 'fails'}"
        if holds:
            qcert = verify_shabat(q)
            lifted_c = qcert.c ** k
            if lifted_c != cert.c:
                holds = False
                detail += f"; c(q)^{k} = {_fmt(lifted_c)} != c(p)"
        check.power_check, check.power_detail = holds, detail
    if entry.sqrt_base is not None:
        try:
            q = poly_sqrt(p)
        except NotASquare as exc:
            check.power_check, check.power_detail = False, f"not a square: {exc}"
        else:
            qcert = verify_shabat(q)
            base = Passport.parse(entry.sqrt_base)
            holds = verify_power(p, q, 2) and Passport(qcert.white_profile, qcert.black_profile) == base
            check.power_check = holds
            check.power_detail = f"sqrt q = {q}; q has profile {qcert.white_profile}|{qcert.black_profile}"
    if entry.printed is not None:
        try:
            _, pc = _certify(entry.printed, entry.integral)
            check.printed_outcome = f"certified, passport {pc.passport}"
        except ShabatError as exc:
            check.printed_outcome = f"{type(exc).__name__}: {exc}"
    return check


def verify_paper_polynomials() -> list[PolynomialCheck]:
    return [check_polynomial(e) for e in POLYNOMIALS]
