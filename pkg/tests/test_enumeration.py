from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest

from dessin.catalog import ROWS
from dessin.enumeration import (
    BoundExceeded,
    TypeBucket,
    all_classes,
    all_passports,
    enumerate_trees,
    goulden_jackson,
    weighted_sum,
    white_rotations,
)
from dessin.tree import (
    Passport,
    PlaneTree,
    TreeError,
    automorphism_order,
    canonical_form,
    inverse,
    compose,
    cycle_count,
    star,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_single_edge():
    buckets = enumerate_trees(1)
    assert len(buckets) == 1
    assert buckets[0].passport == Passport((1,), (1,))
    assert len(buckets[0]) == 1


def test_bounds():
    with pytest.raises(BoundExceeded):
        enumerate_trees(0)
    with pytest.raises(BoundExceeded):
        enumerate_trees(13)


def test_ten_edge_passports_match_table():
    got = [b.passport for b in enumerate_trees(10)]
    assert len(got) == 84
    # same order as the table
    assert got == [ROWS[i].passport for i in range(1, 85)]


def test_total_tree_count_ten():
    assert sum(len(b) for b in enumerate_trees(10)) == 854


@pytest.mark.parametrize("n", range(1, 8))
def test_raw_solutions_brute_force(n):
    """Pruned search finds every white rotation completing the standard face."""
    std = tuple((i + 1) % n for i in range(n))
    brute = []
    for a in permutations(range(n)):
        b = compose(inverse(a), std)
        if cycle_count(a) + cycle_count(b) == n + 1:
            brute.append(a)
    assert sorted(white_rotations(n)) == sorted(brute)
    assert len(brute) == CATALAN[n]


@pytest.mark.parametrize("n", range(1, 11))
def test_labeled_count(n):
    total = sum(n // automorphism_order(t) for t in all_classes(n))
    assert total == len(white_rotations(n)) == CATALAN[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_goulden_jackson_small(n):
    buckets = {b.passport: b for b in enumerate_trees(n)}
    assert set(buckets) == set(all_passports(n))
    for p, b in buckets.items():
        assert goulden_jackson(p) == weighted_sum(b)


def test_goulden_jackson_ten():
    for b in enumerate_trees(10):
        assert goulden_jackson(b.passport) == b.weighted_sum


def test_goulden_jackson_examples():
    assert goulden_jackson(Passport.parse("4,1,1|2,2,1,1")) == Fraction(3, 2)
    assert goulden_jackson(Passport.parse("10|" + ",".join(["1"] * 10))) == Fraction(1, 10)
    assert goulden_jackson(Passport.parse("1|1")) == 1


def test_weighted_sums():
    rows = {b.passport: b for b in enumerate_trees(10)}
    assert rows[ROWS[16].passport].weighted_sum == Fraction(7, 2)
    assert rows[ROWS[1].passport].weighted_sum == Fraction(1, 10)
    assert weighted_sum(TypeBucket(Passport.parse("3,1|2,1,1"), [])) == 0


def test_passport_filter():
    p = Passport.parse("6,2,2|2,2,1,1,1,1,1,1")
    buckets = enumerate_trees(10, p)
    assert [b.passport for b in buckets] == [p]
    assert len(buckets[0]) == 4
    # the swapped spelling selects the same type
    assert enumerate_trees(10, p.swapped())[0].trees == buckets[0].trees
    with pytest.raises(ValueError):
        enumerate_trees(9, p)


def test_bucket_keys_distinct_and_sorted():
    for b in enumerate_trees(9):
        keys = [canonical_form(t) for t in b.trees]
        assert keys == sorted(set(keys))
        assert all(t.passport == b.passport for t in b.trees)
        assert all(b.passport.white >= b.passport.black for t in b.trees)


def test_six_edge_symmetric_type():
    b = enumerate_trees(6, Passport.parse("4,1,1|2,2,1,1"))[0]
    assert sorted(automorphism_order(t) for t in b.trees) == [1, 2]
    assert b.weighted_sum == Fraction(3, 2)


def test_parallel_matches_serial(monkeypatch):
    from dessin import enumeration

    serial = [(b.passport, [canonical_form(t) for t in b.trees]) for b in enumerate_trees(7)]
    monkeypatch.setenv("DESSIN_THREADS", "2")
    enumeration._class_keys.cache_clear()
    try:
        parallel = [(b.passport, [canonical_form(t) for t in b.trees]) for b in enumerate_trees(7)]
    finally:
        enumeration._class_keys.cache_clear()
    assert parallel == serial
