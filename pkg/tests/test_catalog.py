import copy
from collections import Counter
from fractions import Fraction

import pytest

from dessin.catalog import (
    EXPECTATIONS,
    MATCH,
    MISMATCH,
    NO_EXPECTATION,
    NONTRIVIAL_TYPES,
    POLYNOMIALS,
    REFINEMENT,
    ROWS,
    build_catalog,
    compare_with_paper,
    format_report,
    match_orbits,
    verify_paper_polynomials,
)
from dessin.catalog.paperdata import NON_DECOMPOSABLE, TABLE


def test_table_data():
    assert len(TABLE) == 84
    assert len({r.passport for r in ROWS.values()}) == 84
    for r in ROWS.values():
        assert r.passport.white > r.passport.black
        assert r.passport.n == 10


def test_expectations_consistent_with_table():
    assert set(EXPECTATIONS) == set(range(1, 85))
    for i, exp in EXPECTATIONS.items():
        assert exp.weight == ROWS[i].w, i
    assert NONTRIVIAL_TYPES == {33, 43}
    assert not set(NON_DECOMPOSABLE) & {1, 5, 16, 22, 24, 25, 33, 43, 45, 47, 48, 50, 52, 61, 64, 66, 71, 75, 76, 78, 80, 83, 84}


def test_all_rows_present(catalog10):
    assert [r.index for r in catalog10.rows] == list(range(1, 85))
    assert sum(r.tree_count for r in catalog10.rows) == 854


def test_statuses(catalog10):
    statuses = Counter(r.status for r in catalog10.rows)
    assert statuses == {MATCH: 82, REFINEMENT: 2}
    assert {r.index for r in catalog10.rows if r.status == REFINEMENT} == {33, 43}


def test_no_discrepancies(catalog10):
    assert compare_with_paper(catalog10) == []


def test_type5_partition(catalog10):
    r = catalog10.row(5)
    sizes = sorted((c.vector.aut_order, c.size) for c in r.partition)
    assert sizes == [(1, 3), (2, 1)]


def test_type64_partition(catalog10):
    r = catalog10.row(64)
    assert sorted((c.vector.aut_order, c.size) for c in r.partition) == [(1, 14), (2, 2)]


def test_type33_single_class(catalog10):
    r = catalog10.row(33)
    assert [c.size for c in r.partition] == [3]
    assert r.status == REFINEMENT


def test_single_tree_types(catalog10):
    auts = {i: catalog10.row(i).trees[0].vector.aut_order for i in (1, 25, 45, 80, 84)}
    assert auts == {1: 10, 25: 2, 45: 5, 80: 2, 84: 2}
    assert all(catalog10.row(i).tree_count == 1 for i in auts)


def test_invariant_classes_are_unions_of_orbits(catalog10):
    for r in catalog10.rows:
        assignment, exact = match_orbits(r.partition, r.expected.orbits)
        assert assignment is not None
        assert exact == (r.index not in NONTRIVIAL_TYPES)


def test_non_decomposable_types_have_no_symmetry(catalog10):
    for i in NON_DECOMPOSABLE:
        assert all(t.vector.aut_order == 1 for t in catalog10.row(i).trees)


def test_injected_weight_fault(catalog10):
    report = copy.deepcopy(catalog10)
    report.row(1).w_computed = Fraction(1, 5)
    found = compare_with_paper(report)
    assert [(d.kind, d.row) for d in found] == [("WeightMismatch", 1)]


def test_injected_missing_type(catalog10):
    report = copy.deepcopy(catalog10)
    report.rows = [r for r in report.rows if r.index != 50]
    found = compare_with_paper(report)
    assert [(d.kind, d.row) for d in found] == [("MissingType", 50)]


def test_injected_tree_loss(catalog10):
    report = copy.deepcopy(catalog10)
    report.row(16).trees.pop()
    kinds = {d.kind for d in compare_with_paper(report)}
    assert "TreeCountMismatch" in kinds


def test_other_edge_counts_have_no_expectations():
    report = build_catalog(6)
    assert {r.status for r in report.rows} == {NO_EXPECTATION}
    assert report.polynomials == []


def test_polynomials():
    checks = verify_paper_polynomials()
    assert len(checks) == len(POLYNOMIALS) == 10
    assert all(c.ok for c in checks), [c.summary() for c in checks if not c.ok]
    by = {(c.type_index, c.label): c for c in checks}
    assert by[(83, "T1")].certificate.passport == ROWS[83].passport
    assert by[(16, "T4")].power_check
    assert by[(61, "rational tree")].power_check


def test_verbatim_typo_form_reported(catalog10):
    (c33,) = [c for c in catalog10.polynomials if c.type_index == 33]
    assert c33.ok
    assert c33.printed is not None
    assert c33.printed_outcome.startswith("NotShabat")


def test_json_schema(catalog10):
    data = catalog10.to_json()
    row = data["rows"][0]
    assert set(row) >= {"index", "passport", "w_computed", "w_paper", "trees", "partition", "expected", "status"}
    assert set(row["trees"][0]) >= {"canonical_key", "aut", "rot_order", "primitive", "reductions", "power_bases"}
    assert row["w_computed"] == "1/10"


def test_text_report(catalog10):
    text = format_report(catalog10, [])
    assert "84 types, 854 trees" in text
    assert "No discrepancies" in text
    assert text.count(REFINEMENT) == 2
