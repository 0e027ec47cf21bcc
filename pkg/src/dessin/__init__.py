"""Plane bicolored trees, their Galois invariants, and Shabat polynomials."""

from .enumeration import BoundExceeded, TypeBucket, enumerate_trees, goulden_jackson, weighted_sum
from .invariants import InvariantVector, invariant_vector, power_bases, power_lift, reductions
from .permgroup import NotTransitive, PermGroup, group_order, is_primitive, is_transitive
from .tree import (
    NotAPermutation,
    NotConnectedSingleFace,
    Passport,
    PlaneTree,
    TreeError,
    WrongGenus,
    automorphism_order,
    canonical_form,
    color_swap,
    normalize_colors,
    passport_of,
    validate,
)

__version__ = "0.1.0"
