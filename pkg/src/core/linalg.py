"""Exact linear algebra over the rationals.

Matrices are numpy object arrays holding ``Fraction`` entries. Elimination
pivots on the first nonzero entry, scanning rows top to bottom and columns
left to right, so every result is deterministic.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from src.core.tensor import to_scalar


def as_matrix(rows, cols: int = 0) -> np.ndarray:
    """
    Build a Fraction-valued object matrix.

    Args:
        rows: Nested sequence (or 2-D array) of exact values
        cols: Column count used when ``rows`` is empty

    Returns:
        2-D numpy array with dtype=object
    """
    arr = np.asarray(rows, dtype=object)
    if arr.size == 0:
        width = arr.shape[1] if arr.ndim == 2 else cols
        return np.empty((0, width), dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got shape {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = to_scalar(arr[idx])
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(m: int) -> np.ndarray:
    out = zeros(m, m)
    for i in range(m):
        out[i, i] = Fraction(1)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product of object matrices."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply {a.shape} by {b.shape}")
    out = zeros(a.shape[0], b.shape[1])
    for i in range(a.shape[0]):
        for k in range(a.shape[1]):
            aik = a[i, k]
            if aik == 0:
                continue
            for j in range(b.shape[1]):
                if b[k, j] != 0:
                    out[i, j] += aik * b[k, j]
    return out


def is_zero(matrix: np.ndarray) -> bool:
    return all(x == 0 for x in matrix.flat)


def row_reduce(matrix) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form.

    Args:
        matrix: Any 2-D exact matrix

    Returns:
        (RREF matrix, list of pivot columns)
    """
    m = as_matrix(matrix)
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row, piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[[piv_r, i_row]] = m[[i_row, piv_r]]
        fp = m[piv_r, piv_c]
        for c in range(piv_c, n_cols):
            m[piv_r, c] = m[piv_r, c] / fp
        for r in range(n_rows):
            fr = m[r, piv_c]
            if r == piv_r or fr == 0:
                continue
            for c in range(piv_c, n_cols):
                m[r, c] -= m[piv_r, c] * fr
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def rank(matrix) -> int:
    arr = as_matrix(matrix)
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    return len(row_reduce(arr)[1])


def row_space(matrix) -> np.ndarray:
    """Basis of the row space as the nonzero rows of the RREF."""
    arr = as_matrix(matrix)
    if arr.shape[0] == 0:
        return arr
    reduced, pivots = row_reduce(arr)
    return reduced[:len(pivots)].copy()


def null_space(matrix, cols: int = 0) -> np.ndarray:
    """
    Basis of ``{x : A x = 0}``, one basis vector per row.

    Args:
        matrix: Coefficient matrix A
        cols: Number of unknowns when A has no rows
    """
    arr = as_matrix(matrix, cols)
    n_cols = arr.shape[1]
    if arr.shape[0] == 0:
        return identity(n_cols)
    reduced, pivots = row_reduce(arr)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = zeros(len(free), n_cols)
    for out_row, f in enumerate(free):
        basis[out_row, f] = Fraction(1)
        for r, p in enumerate(pivots):
            basis[out_row, p] = -reduced[r, f]
    return basis


def inverse(matrix) -> np.ndarray:
    """
    Exact inverse.

    Raises:
        ValueError: if the matrix is not square or is singular
    """
    arr = as_matrix(matrix)
    m = arr.shape[0]
    if arr.shape != (m, m):
        raise ValueError(f"Cannot invert non-square matrix of shape {arr.shape}")
    augmented = np.concatenate([arr, identity(m)], axis=1)
    reduced, pivots = row_reduce(augmented)
    if pivots[:m] != list(range(m)):
        raise ValueError("Matrix is singular")
    return reduced[:, m:].copy()


def determinant(matrix) -> Fraction:
    arr = as_matrix(matrix)
    m = arr.shape[0]
    if arr.shape != (m, m):
        raise ValueError(f"Determinant of non-square matrix {arr.shape}")
    work = arr.copy()
    det = Fraction(1)
    for c in range(m):
        pivot = next((r for r in range(c, m) if work[r, c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[[c, pivot]] = work[[pivot, c]]
            det = -det
        det *= work[c, c]
        for r in range(c + 1, m):
            factor = work[r, c] / work[c, c]
            if factor != 0:
                for k in range(c, m):
                    work[r, k] -= factor * work[c, k]
    return det


def transpose(matrix: np.ndarray) -> np.ndarray:
    return as_matrix(matrix).T.copy()


def is_symmetric(matrix) -> bool:
    arr = as_matrix(matrix)
    return arr.shape[0] == arr.shape[1] and all(
        arr[i, j] == arr[j, i] for i in range(arr.shape[0]) for j in range(i + 1, arr.shape[0])
    )


def is_skew(matrix) -> bool:
    arr = as_matrix(matrix)
    return arr.shape[0] == arr.shape[1] and all(
        arr[i, j] == -arr[j, i] for i in range(arr.shape[0]) for j in range(i, arr.shape[0])
    )


def outer(u: Sequence, v: Sequence) -> np.ndarray:
    return as_matrix([[to_scalar(a) * to_scalar(b) for b in v] for a in u])


def random_rational(rng: np.random.Generator, max_numerator: int = 3, max_denominator: int = 3,
                    nonzero: bool = False) -> Fraction:
    """Draw p/q with |p| ≤ max_numerator and 1 ≤ q ≤ max_denominator."""
    while True:
        num = int(rng.integers(-max_numerator, max_numerator + 1))
        den = int(rng.integers(1, max_denominator + 1))
        if num != 0 or not nonzero:
            return Fraction(num, den)


def random_vector(rng: np.random.Generator, size: int, max_numerator: int = 3) -> List[Fraction]:
    return [random_rational(rng, max_numerator) for _ in range(size)]


def random_matrix(rng: np.random.Generator, rows: int, cols: int, max_numerator: int = 3) -> np.ndarray:
    return as_matrix([[random_rational(rng, max_numerator) for _ in range(cols)] for _ in range(rows)])


def random_invertible(rng: np.random.Generator, m: int, max_numerator: int = 3) -> np.ndarray:
    """Random rational matrix with nonzero determinant."""
    while True:
        candidate = random_matrix(rng, m, m, max_numerator)
        if determinant(candidate) != 0:
            return candidate


def require_invertible(matrix, dim: int) -> np.ndarray:
    """
    Coerce to an exact dim×dim matrix and reject singular maps.

    Raises:
        ValueError: on wrong shape or zero determinant
    """
    arr = as_matrix(matrix)
    if arr.shape != (dim, dim):
        raise ValueError(f"Map of shape {arr.shape} on a space of dim {dim}")
    if determinant(arr) == 0:
        raise ValueError("Map is singular")
    return arr
