"""Tests for comultiplications on A_n and the end-to-end classification check."""

import pytest

from src.algebra.bialgebra import Bialgebra, check_compatibility_tensor, validate
from src.algebra.coalgebra import dual_algebra, rank
from src.algebra.structure import filippov_matrix
from src.catalog.canonical import CanonicalLabel, simple_an
from src.catalog.classifier import classify
from src.catalog.examples import example_coalgebra_top
from src.core import linalg
from src.solver.an_solver import (
    FAMILIES,
    AnDeltaMatrix,
    FamilyTally,
    an_delta_from_matrix,
    b_matrix,
    check_an_constraints,
    coalgebra_B_criterion,
    derive_an_constraints,
    exhaustive_constraint_grid,
    random_skew_rank2,
    random_skew_rank4,
    random_violating,
    verify_an_classification,
)


def unit_sum(n, *cells):
    a = linalg.zeros(n + 1, n + 1)
    for i, j, value in cells:
        a[i - 1, j - 1] = value
    return AnDeltaMatrix(n, a)


@pytest.fixture
def swap12():
    """a = E12 + E21 at n = 3: Δ(e_1) = e_1∧e_3∧e_4, Δ(e_2) = e_2∧e_3∧e_4."""
    return unit_sum(3, (1, 2, 1), (2, 1, 1))


class TestAnDeltaMatrix:

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            AnDeltaMatrix(3, linalg.zeros(3, 3))

    def test_small_n(self):
        with pytest.raises(ValueError):
            AnDeltaMatrix(1, linalg.zeros(2, 2))

    def test_images(self, swap12):
        delta = an_delta_from_matrix(swap12)
        assert delta.coefficient(1, (1, 3, 4)) == 1
        assert delta.coefficient(2, (2, 3, 4)) == 1
        assert delta.image(3).is_zero()

    def test_identity_is_top_coalgebra(self):
        assert an_delta_from_matrix(AnDeltaMatrix(3, linalg.identity(4))) == example_coalgebra_top(3)


class TestBMatrix:

    def test_sign_rule(self, swap12):
        b = b_matrix(swap12).b
        assert b[0, 1] == 1
        assert b[1, 0] == -1

    def test_from_b_inverts(self, rng):
        d = AnDeltaMatrix(4, linalg.random_matrix(rng, 5, 5))
        assert (AnDeltaMatrix.from_b(4, b_matrix(d).b).a == d.a).all()

    def test_is_dual_filippov_matrix(self, swap12):
        delta = an_delta_from_matrix(swap12)
        assert (filippov_matrix(dual_algebra(delta)) == b_matrix(swap12).b).all()

    def test_properties(self, swap12):
        b = b_matrix(swap12)
        assert b.is_skew and not b.is_symmetric
        assert b.rank == 2


class TestConstraints:

    def test_swap_satisfies(self, swap12):
        assert check_an_constraints(swap12)
        assert validate(Bialgebra(simple_an(3), an_delta_from_matrix(swap12))).ok

    def test_swap_rank_and_dual_type(self, swap12):
        delta = an_delta_from_matrix(swap12)
        assert rank(delta) == 2
        assert classify(dual_algebra(delta)) == CanonicalLabel("c3")

    @pytest.mark.parametrize("cells", [
        [(1, 1, 1)],
        [(1, 2, 1)],
        [(1, 2, 1), (2, 1, -1)],
        [(1, 3, 1), (3, 1, 1)],
    ])
    def test_violations_fail_compatibility(self, cells):
        d = unit_sum(3, *cells)
        assert not check_an_constraints(d)
        assert not check_compatibility_tensor(Bialgebra(simple_an(3), an_delta_from_matrix(d))).ok

    def test_identity_fails(self):
        d = AnDeltaMatrix(3, linalg.identity(4))
        assert not check_an_constraints(d)
        assert not validate(Bialgebra(simple_an(3), an_delta_from_matrix(d))).ok

    def test_skew_b_gives_constraints(self, rng):
        for _ in range(5):
            assert check_an_constraints(AnDeltaMatrix.from_b(3, random_skew_rank2(rng, 4)))

    @pytest.mark.parametrize("n", [3, 4])
    def test_derivation_matches(self, n):
        derivation = derive_an_constraints(n)
        assert derivation.equal
        assert derivation.dimension == n * (n + 1) // 2


class TestCoalgebraCriterion:

    def test_top_coalgebra(self):
        criterion = coalgebra_B_criterion(AnDeltaMatrix(3, linalg.identity(4)))
        assert criterion.b_symmetric and criterion.b_rank == 4
        assert criterion.dual_route_ok and criterion.delta_rank == 4
        assert criterion.consistent

    def test_rank_two(self, swap12):
        criterion = coalgebra_B_criterion(swap12)
        assert criterion.dual_route_ok and criterion.delta_rank == 2
        assert criterion.consistent

    def test_rank_four_fails_both_routes(self, rng):
        criterion = coalgebra_B_criterion(AnDeltaMatrix.from_b(3, random_skew_rank4(rng, 4)))
        assert not criterion.dual_route_ok and not criterion.tensor_route_ok
        assert criterion.consistent


class TestSampling:

    def test_rank2(self, rng):
        skew = random_skew_rank2(rng, 5)
        assert linalg.is_skew(skew) and linalg.rank(skew) == 2

    def test_rank4(self, rng):
        skew = random_skew_rank4(rng, 5)
        assert linalg.is_skew(skew) and linalg.rank(skew) == 4

    def test_rank4_needs_room(self, rng):
        with pytest.raises(ValueError):
            random_skew_rank4(rng, 3)

    def test_violating(self, rng):
        assert not check_an_constraints(random_violating(rng, 3))


class TestFamilyTally:

    def test_record(self):
        tally = FamilyTally("zero")
        tally.record(True, 1, "")
        tally.record(False, 2, "boom")
        assert (tally.passed, tally.failed, tally.total) == (1, 1, 2)
        assert tally.failures == ["trial 2: boom"]


class TestVerifyClassification:

    def test_small_run(self):
        report = verify_an_classification(3, trials=2, seed=7)
        assert report.ok
        assert set(report.families) == set(FAMILIES)
        assert report.total_checks == 1 + 3 * 2
        assert report.derivation.equal

    def test_reproducible(self):
        first = verify_an_classification(3, trials=1, seed=11)
        second = verify_an_classification(3, trials=1, seed=11)
        assert {k: (t.passed, t.failed) for k, t in first.families.items()} == \
               {k: (t.passed, t.failed) for k, t in second.families.items()}

    @pytest.mark.parametrize("n, trials", [(2, 1), (3, 0)])
    def test_bad_arguments(self, n, trials):
        with pytest.raises(ValueError):
            verify_an_classification(n, trials=trials, seed=0)

    @pytest.mark.slow
    def test_arity_four(self):
        assert verify_an_classification(4, trials=3, seed=2024).ok

    @pytest.mark.slow
    def test_hundred_trials(self):
        report = verify_an_classification(3, trials=100, seed=7)
        assert report.ok
        for family in ("skew_rank2", "skew_rank4", "violating"):
            assert (report.families[family].passed, report.families[family].failed) == (100, 0)


class TestExhaustiveGrid:

    def test_small_grid(self):
        assert exhaustive_constraint_grid(3, values=(0, 1), free_rows=1) == (16, 0)

    @pytest.mark.slow
    def test_full_grid(self):
        assert exhaustive_constraint_grid() == (6561, 0)


def test_zero_matrix_is_trivial_bialgebra():
    d = AnDeltaMatrix(3, linalg.zeros(4, 4))
    assert check_an_constraints(d)
    assert rank(an_delta_from_matrix(d)) == 0
