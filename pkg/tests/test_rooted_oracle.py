"""The rooted-tree generator agrees with the permutation search."""

from collections import Counter

import pytest

from dessin.enumeration import enumerate_trees, goulden_jackson
from dessin.rooted import ordered_trees, rooted_buckets, rooted_classes, rooting_census
from dessin.tree import automorphism_order, canonical_form

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@pytest.mark.parametrize("n", range(1, 11))
def test_buckets_agree(n):
    primary = {b.passport: sorted(canonical_form(t) for t in b.trees) for b in enumerate_trees(n)}
    oracle = {p: sorted(canonical_form(c.plane_tree()) for c in cs) for p, cs in rooted_buckets(n).items()}
    assert primary == oracle


@pytest.mark.parametrize("n", range(1, 9))
def test_rooted_automorphisms(n):
    for c in rooted_classes(n):
        assert c.automorphism_order == automorphism_order(c.plane_tree())


@pytest.mark.parametrize("n", range(1, 9))
def test_rooting_census_is_n_times_weight(n):
    census = rooting_census(n)
    for p, count in census.items():
        assert count == n * goulden_jackson(p)


def test_ordered_tree_count():
    for n in range(1, 9):
        assert len(ordered_trees(n)) == CATALAN[n]
