"""Canonical forms, worked examples and the (n+1)-dimensional classifier."""

from .canonical import CanonicalLabel, Unclassified, canonical_algebra, simple_an, all_labels
from .classifier import classify
from .examples import (
    ThreeDeltas,
    example_bialgebra,
    example_coalgebra_matrix,
    example_coalgebra_top,
    example_three_deltas,
)
from .registry import Fixture, FixtureRegistry, get_registry

__all__ = [
    "CanonicalLabel",
    "Unclassified",
    "canonical_algebra",
    "simple_an",
    "all_labels",
    "classify",
    "ThreeDeltas",
    "example_bialgebra",
    "example_coalgebra_matrix",
    "example_coalgebra_top",
    "example_three_deltas",
    "Fixture",
    "FixtureRegistry",
    "get_registry",
]
