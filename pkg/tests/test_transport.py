"""Tests for basis changes and isomorphism checks."""

import numpy as np
import pytest

from src.algebra.bialgebra import Bialgebra, check_equivalence_map, validate
from src.algebra.coalgebra import Comultiplication, check_coalgebra_iso, dual_algebra, rank
from src.algebra.structure import is_n_lie
from src.algebra.transport import (
    check_algebra_iso,
    permutation_matrix,
    transport_algebra,
    transport_comultiplication,
    transport_pair,
)
from src.core import linalg
from src.solver.fuzz import random_constants


class TestPermutationMatrix:

    def test_column_convention(self):
        p = permutation_matrix({1: 2, 2: 1}, 3)
        assert p[1, 0] == 1 and p[0, 1] == 1 and p[2, 2] == 1

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            permutation_matrix({1: 2}, 3)
        with pytest.raises(ValueError):
            permutation_matrix({1: 5}, 3)


class TestTransport:

    def test_identity_is_noop(self, a3):
        assert transport_algebra(a3, linalg.identity(4)) == a3

    def test_transported_algebra_is_isomorphic(self, a3, rng):
        p = linalg.random_invertible(rng, 4)
        moved = transport_algebra(a3, p)
        assert is_n_lie(moved)
        assert check_algebra_iso(p, moved, a3)

    def test_transported_comultiplication(self, worked_example, rng):
        phi = linalg.random_invertible(rng, 4)
        moved = transport_comultiplication(worked_example.delta, phi)
        assert check_coalgebra_iso(phi, worked_example.delta, moved)
        assert rank(moved) == rank(worked_example.delta)

    def test_transport_pair_is_equivalence(self, worked_example, rng):
        phi = linalg.random_invertible(rng, 4)
        mu, delta = transport_pair(worked_example.mu, worked_example.delta, phi)
        moved = Bialgebra(mu, delta)
        assert check_equivalence_map(phi, worked_example, moved)
        assert validate(moved).ok

    def test_singular_rejected(self, a3):
        with pytest.raises(ValueError):
            transport_algebra(a3, linalg.zeros(4, 4))

    @pytest.mark.parametrize("seed", range(6))
    def test_dual_algebras_follow_transpose(self, seed):
        rng = np.random.default_rng(seed)
        d1 = Comultiplication(random_constants(rng, 3, 4))
        phi = linalg.random_invertible(rng, 4)
        d2 = transport_comultiplication(d1, phi)
        phi_t = linalg.transpose(phi)
        assert transport_algebra(dual_algebra(d1), phi_t) == dual_algebra(d2)
        assert check_algebra_iso(phi_t, dual_algebra(d2), dual_algebra(d1))

    def test_worked_example_dual_follows_transpose(self, worked_example, rng):
        phi = linalg.random_invertible(rng, 4)
        moved = dual_algebra(transport_comultiplication(worked_example.delta, phi))
        assert check_algebra_iso(linalg.transpose(phi), moved, dual_algebra(worked_example.delta))


class TestAlgebraIso:

    def test_mismatch(self, a3, heisenberg):
        with pytest.raises(ValueError):
            check_algebra_iso(linalg.identity(4), a3, heisenberg)

    def test_not_an_iso(self, a3):
        assert not check_algebra_iso(linalg.identity(4) * 2, a3, a3)
