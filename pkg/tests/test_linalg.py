"""Tests for exact rational linear algebra."""

from fractions import Fraction

import numpy as np
import pytest

from src.core import linalg


class TestMatrices:

    def test_as_matrix_is_exact(self):
        m = linalg.as_matrix([[1, "1/2"], [Fraction(2, 3), 0]])
        assert m.dtype == object
        assert m[0, 1] == Fraction(1, 2)

    def test_as_matrix_rejects_float(self):
        with pytest.raises(TypeError):
            linalg.as_matrix([[0.5]])

    def test_empty_matrix_keeps_width(self):
        assert linalg.as_matrix([], 4).shape == (0, 4)

    def test_matmul(self):
        a = linalg.as_matrix([[1, 2], [3, 4]])
        assert (linalg.matmul(a, linalg.identity(2)) == a).all()
        with pytest.raises(ValueError):
            linalg.matmul(a, linalg.identity(3))


class TestElimination:

    def test_row_reduce(self):
        reduced, pivots = linalg.row_reduce([[2, 4, 2], [1, 2, 3]])
        assert pivots == [0, 2]
        assert list(reduced[0]) == [1, 2, 0]

    def test_rank(self):
        assert linalg.rank([[1, 2], [2, 4]]) == 1
        assert linalg.rank(linalg.identity(3)) == 3
        assert linalg.rank(linalg.zeros(0, 3)) == 0

    def test_null_space(self):
        a = linalg.as_matrix([[1, 1, 0], [0, 1, 1]])
        basis = linalg.null_space(a)
        assert basis.shape == (1, 3)
        assert linalg.is_zero(linalg.matmul(a, basis.T))

    def test_null_space_without_equations(self):
        assert (linalg.null_space([], 3) == linalg.identity(3)).all()

    def test_inverse(self):
        a = linalg.as_matrix([[2, 1], [1, 1]])
        assert (linalg.matmul(a, linalg.inverse(a)) == linalg.identity(2)).all()

    def test_inverse_singular(self):
        with pytest.raises(ValueError, match="singular"):
            linalg.inverse([[1, 2], [2, 4]])

    def test_determinant(self):
        assert linalg.determinant([[0, 1], [1, 0]]) == -1
        assert linalg.determinant([[2, 0, 0], [0, Fraction(1, 2), 0], [0, 0, 3]]) == 3
        assert linalg.determinant([[1, 2], [2, 4]]) == 0

    def test_row_space(self):
        assert linalg.row_space([[1, 2], [2, 4]]).shape == (1, 2)


class TestShapes:

    def test_symmetry_predicates(self):
        assert linalg.is_symmetric([[1, 2], [2, 3]])
        assert not linalg.is_symmetric([[1, 2], [3, 1]])
        assert linalg.is_skew([[0, 1], [-1, 0]])
        assert not linalg.is_skew([[1, 1], [-1, 0]])

    def test_outer(self):
        assert (linalg.outer([1, 2], [3, 4]) == linalg.as_matrix([[3, 4], [6, 8]])).all()

    def test_require_invertible(self):
        assert linalg.require_invertible([[1, 0], [0, 1]], 2).shape == (2, 2)
        with pytest.raises(ValueError, match="singular"):
            linalg.require_invertible([[1, 1], [1, 1]], 2)
        with pytest.raises(ValueError):
            linalg.require_invertible([[1, 0], [0, 1]], 3)


class TestRandom:

    def test_reproducible(self):
        a = linalg.random_matrix(np.random.default_rng(5), 3, 3)
        b = linalg.random_matrix(np.random.default_rng(5), 3, 3)
        assert (a == b).all()

    def test_bounds(self, rng):
        for _ in range(50):
            q = linalg.random_rational(rng, max_numerator=2, max_denominator=3, nonzero=True)
            assert q != 0
            assert abs(q.numerator) <= 2 and q.denominator <= 3

    def test_random_invertible(self, rng):
        assert linalg.determinant(linalg.random_invertible(rng, 4)) != 0
