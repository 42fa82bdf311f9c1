"""Tests for canonical labels, the classifier, worked examples and the fixture registry."""

from fractions import Fraction

import pytest

from src.algebra.coalgebra import check_coalgebra_dual, check_coalgebra_tensor, dual_algebra, rank
from src.algebra.structure import StructureConstants, is_n_lie
from src.algebra.transport import transport_algebra
from src.catalog.canonical import CanonicalLabel, Unclassified, all_labels, canonical_algebra, simple_an
from src.catalog.classifier import classify
from src.catalog.examples import (
    example_bialgebra,
    example_coalgebra_matrix,
    example_coalgebra_top,
    matrix_basis_labels,
)
from src.catalog.registry import Fixture, FixtureRegistry
from src.core import linalg
from src.core.report import PreconditionError


class TestCanonicalLabel:

    @pytest.mark.parametrize("text, expected", [
        ("abelian", CanonicalLabel("abelian")),
        ("B1", CanonicalLabel("b1")),
        ("c2:1/3", CanonicalLabel("c2", alpha=Fraction(1, 3))),
        ("c2:-2", CanonicalLabel("c2", alpha=Fraction(-2))),
        ("d:4", CanonicalLabel("d", rank=4)),
    ])
    def test_parse(self, text, expected):
        assert CanonicalLabel.parse(text) == expected

    @pytest.mark.parametrize("text", ["c2", "c2:0", "c2:x", "d", "d:2", "c3:1", "e1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            CanonicalLabel.parse(text)

    def test_str_round_trip(self):
        for label in all_labels(4):
            assert CanonicalLabel.parse(str(label)) == label

    def test_all_labels(self):
        assert len(all_labels(3)) == 10
        assert len(all_labels(4)) == 11


class TestCanonicalAlgebra:

    def test_c2_constants(self):
        mu = canonical_algebra(3, CanonicalLabel("c2", alpha=Fraction(1)))
        assert mu.vector((2, 3, 4)) == (1, 1, 0, 0)
        assert mu.vector((1, 3, 4)) == (0, 1, 0, 0)

    @pytest.mark.parametrize("n", [3, 4])
    def test_every_label_is_n_lie(self, n):
        for label in all_labels(n):
            assert is_n_lie(canonical_algebra(n, label)), str(label)

    def test_d_rank_bound(self):
        with pytest.raises(ValueError):
            canonical_algebra(3, CanonicalLabel("d", rank=5))

    def test_small_arity(self):
        with pytest.raises(ValueError):
            canonical_algebra(2, CanonicalLabel("b1"))

    def test_accepts_label_text(self):
        assert canonical_algebra(3, "c3") == canonical_algebra(3, CanonicalLabel("c3"))

    def test_simple_needs_flag_for_lie(self):
        with pytest.raises(ValueError):
            simple_an(2)
        assert simple_an(2, allow_lie=True).dim == 3


class TestClassify:

    def test_round_trip(self, canonical_n3):
        label, mu = canonical_n3
        assert classify(mu) == label

    @pytest.mark.parametrize("text", ["b1", "b2", "c1", "c2:1/3", "c2:-2", "c3", "d:3", "d:4"])
    def test_invariant_under_basis_change(self, text, rng):
        label = CanonicalLabel.parse(text)
        mu = canonical_algebra(3, label)
        for _ in range(3):
            moved = transport_algebra(mu, linalg.random_invertible(rng, 4))
            assert classify(moved) == label

    def test_distinct_alpha_stay_distinct(self):
        labels = {classify(canonical_algebra(4, CanonicalLabel("c2", alpha=a))) for a in (1, 2, Fraction(1, 3))}
        assert len(labels) == 3

    def test_simple_is_full_rank(self, a3, a4):
        assert classify(a3) == CanonicalLabel("d", rank=4)
        assert classify(a4) == CanonicalLabel("d", rank=5)

    def test_worked_example(self, worked_example):
        assert classify(worked_example.mu) == CanonicalLabel("c3")
        assert classify(dual_algebra(worked_example.delta)) == CanonicalLabel("c1")

    def test_lie_case(self, sl2_like):
        assert isinstance(classify(sl2_like), Unclassified)
        assert classify(StructureConstants.zero(2, 3)) == CanonicalLabel("abelian")

    def test_not_n_lie(self, perturbed_a3):
        with pytest.raises(PreconditionError):
            classify(perturbed_a3)

    def test_wrong_dimension(self):
        with pytest.raises(ValueError):
            classify(StructureConstants.zero(3, 5))


class TestExamples:

    def test_top_dual_is_simple(self):
        assert dual_algebra(example_coalgebra_top(3)) == simple_an(3)

    def test_worked_example_rank(self):
        assert rank(example_bialgebra(4).delta) == 2

    def test_small_n(self):
        with pytest.raises(ValueError):
            example_bialgebra(2)
        with pytest.raises(ValueError):
            example_coalgebra_top(1)

    def test_matrix_labels(self):
        assert matrix_basis_labels(2) == ["E12", "E21", "H1", "E"]
        assert len(matrix_basis_labels(3)) == 9

    def test_matrix_example_m2(self):
        d = example_coalgebra_matrix(2)
        assert (d.arity, d.dim) == (3, 4)
        assert d.image(4).is_zero()
        assert d.image(1).is_zero() and d.image(2).is_zero()
        # Δ(H1) = E∧E12∧E21
        assert d.coefficient(3, (1, 2, 4)) == 1

    def test_matrix_example_m2_is_a_coalgebra(self):
        d = example_coalgebra_matrix(2)
        assert check_coalgebra_dual(d).ok
        assert check_coalgebra_tensor(d).ok
        assert rank(d) == 1

    def test_matrix_example_routes_agree(self):
        d = example_coalgebra_matrix(3)
        assert d.image(9).is_zero()
        assert check_coalgebra_dual(d).ok == check_coalgebra_tensor(d).ok

    def test_matrix_example_small(self):
        with pytest.raises(ValueError):
            example_coalgebra_matrix(1)


class TestFixtureRegistry:

    def test_builtin_names(self):
        registry = FixtureRegistry()
        names = registry.get_names()
        assert {"abelian", "c2", "d", "simple", "top", "example", "three-deltas", "matrix"} <= set(names)
        assert len(registry.list_fixtures()) == len(names)

    def test_build_label(self):
        fixture = FixtureRegistry().build("c2:1/3", 3)
        assert fixture.name == "c2:1/3"
        assert fixture.mu == canonical_algebra(3, CanonicalLabel("c2", alpha=Fraction(1, 3)))
        assert fixture.delta is None
        assert (fixture.arity, fixture.dim) == (3, 4)

    def test_build_example(self):
        fixture = FixtureRegistry().build("example", 4)
        assert fixture.mu == example_bialgebra(4).mu
        assert fixture.delta == example_bialgebra(4).delta

    def test_build_coalgebra_only(self):
        fixture = FixtureRegistry().build("top", 2)
        assert fixture.mu is None
        assert (fixture.arity, fixture.dim) == (2, 3)

    @pytest.mark.parametrize("name", ["nope", "three-deltas", "three-deltas:4", "simple:1", "d:9"])
    def test_bad_names(self, name):
        with pytest.raises(ValueError):
            FixtureRegistry().build(name, 3)

    def test_register_custom(self, a3):
        registry = FixtureRegistry()
        registry.register("mine", lambda n, param: Fixture("custom", mu=a3))
        assert registry.build("mine", 3).mu == a3
        assert registry.unregister("mine")
        assert not registry.unregister("mine")

    def test_register_rejects_non_callable(self):
        with pytest.raises(TypeError):
            FixtureRegistry().register("bad", "not a builder")
