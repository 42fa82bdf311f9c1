"""n-Lie algebras as antisymmetric structure constants.

``StructureConstants`` stores ``c^k_{i_1…i_n}`` keyed by strictly increasing
index tuples; lookups on arbitrary tuples go through ``canonicalize`` and pick
up the sorting sign. The same type carries comultiplication constants
``a_l^{i_1…i_n}`` (see ``src.algebra.coalgebra``).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.core import linalg
from src.core.report import ValidationReport
from src.core.tensor import IndexTuple, canonicalize, to_scalar
from src.utils.logger import get_logger

logger = get_logger()

VectorLike = Union[Sequence, Mapping[int, object]]


def increasing_tuples(dim: int, length: int) -> Iterator[IndexTuple]:
    """All strictly increasing tuples of length ``length`` from 1..dim."""
    return combinations(range(1, dim + 1), length)


def _check_range(indices: Sequence[int], dim: int) -> None:
    for i in indices:
        if not 1 <= i <= dim:
            raise ValueError(f"Index {i} out of range 1..{dim} in {tuple(indices)}")


@dataclass(frozen=True)
class VectorElement:
    """A vector of L in the standard basis, as a dense tuple of Fractions."""
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(to_scalar(c) for c in self.coefficients))

    @classmethod
    def basis(cls, i: int, dim: int) -> "VectorElement":
        _check_range((i,), dim)
        return cls(tuple(Fraction(1) if k == i else Fraction(0) for k in range(1, dim + 1)))

    @classmethod
    def zero(cls, dim: int) -> "VectorElement":
        return cls((Fraction(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> Fraction:
        """1-based coefficient lookup."""
        return self.coefficients[k - 1]

    def nonzero(self) -> List[Tuple[int, Fraction]]:
        return [(k, c) for k, c in enumerate(self.coefficients, start=1) if c != 0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def _check(self, other: "VectorElement") -> None:
        if not isinstance(other, VectorElement):
            raise TypeError(f"Expected VectorElement, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "VectorElement") -> "VectorElement":
        self._check(other)
        return VectorElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "VectorElement") -> "VectorElement":
        self._check(other)
        return VectorElement(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "VectorElement":
        return VectorElement(tuple(-a for a in self.coefficients))

    def scale(self, factor) -> "VectorElement":
        c = to_scalar(factor)
        return VectorElement(tuple(c * a for a in self.coefficients))

    def __mul__(self, factor) -> "VectorElement":
        return self.scale(factor)

    __rmul__ = __mul__

    def transform(self, matrix: np.ndarray) -> "VectorElement":
        """Image under the matrix (column convention)."""
        if matrix.shape[1] != self.dim:
            raise ValueError(f"Matrix of shape {matrix.shape} cannot act on dim {self.dim}")
        return VectorElement(tuple(
            sum((to_scalar(matrix[r, c]) * a for c, a in enumerate(self.coefficients) if a != 0), Fraction(0))
            for r in range(matrix.shape[0])
        ))

    def __str__(self) -> str:
        terms = [f"{c}·e{k}" for k, c in self.nonzero()]
        return " + ".join(terms) if terms else "0"


class StructureConstants:
    """
    Antisymmetric n-ary constants over an m-dimensional space.

    Entries map index tuples (any order) to coefficient vectors, given either
    as a length-m sequence or as a sparse ``{k: value}`` map with 1-based k.
    Tuples that are not increasing are canonicalized with their sign; entries
    that land on the same canonical tuple are summed.
    """

    def __init__(self, arity: int, dim: int,
                 entries: Optional[Mapping[Sequence[int], VectorLike]] = None):
        """
        Raises:
            ValueError: if arity < 2, dim < 1, a tuple has the wrong length or
                range, or a repeated-index tuple carries a nonzero coefficient
        """
        if arity < 2:
            raise ValueError(f"Arity must be at least 2, got {arity}")
        if dim < 1:
            raise ValueError(f"Dimension must be positive, got {dim}")
        self._arity = arity
        self._dim = dim
        store: Dict[IndexTuple, List[Fraction]] = {}
        for key, image in (entries or {}).items():
            idx = tuple(int(i) for i in key)
            if len(idx) != arity:
                raise ValueError(f"Tuple {idx} has length {len(idx)}, expected {arity}")
            _check_range(idx, dim)
            vec = self._vector_from(image)
            canon = canonicalize(idx)
            if canon is None:
                if any(v != 0 for v in vec):
                    raise ValueError(f"Repeated index with nonzero coefficient at {idx}")
                continue
            base, sign = canon
            acc = store.setdefault(base, [Fraction(0)] * dim)
            for k, v in enumerate(vec):
                acc[k] += sign * v
        self._entries: Dict[IndexTuple, Tuple[Fraction, ...]] = {
            key: tuple(vec) for key, vec in store.items() if any(v != 0 for v in vec)
        }

    def _vector_from(self, image: VectorLike) -> List[Fraction]:
        if isinstance(image, VectorElement):
            image = image.coefficients
        if isinstance(image, Mapping):
            vec = [Fraction(0)] * self._dim
            for k, value in image.items():
                _check_range((int(k),), self._dim)
                vec[int(k) - 1] += to_scalar(value)
            return vec
        values = [to_scalar(v) for v in image]
        if len(values) != self._dim:
            raise ValueError(f"Coefficient vector has length {len(values)}, expected {self._dim}")
        return values

    @classmethod
    def zero(cls, arity: int, dim: int) -> "StructureConstants":
        return cls(arity, dim)

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def dim(self) -> int:
        return self._dim

    def items(self) -> List[Tuple[IndexTuple, Tuple[Fraction, ...]]]:
        """Nonzero entries sorted by tuple."""
        return sorted(self._entries.items())

    def entries(self) -> Dict[IndexTuple, Tuple[Fraction, ...]]:
        return dict(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def vector(self, indices: Sequence[int]) -> Tuple[Fraction, ...]:
        """Signed coefficient vector at an arbitrary tuple."""
        idx = tuple(indices)
        if len(idx) != self._arity:
            raise ValueError(f"Tuple {idx} has length {len(idx)}, expected {self._arity}")
        _check_range(idx, self._dim)
        canon = canonicalize(idx)
        if canon is None:
            return (Fraction(0),) * self._dim
        base, sign = canon
        vec = self._entries.get(base)
        if vec is None:
            return (Fraction(0),) * self._dim
        return vec if sign == 1 else tuple(-v for v in vec)

    def coefficient(self, indices: Sequence[int], k: int) -> Fraction:
        _check_range((k,), self._dim)
        return self.vector(indices)[k - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (self._arity, self._dim, self._entries) == (other._arity, other._dim, other._entries)

    def __hash__(self) -> int:
        return hash((self._arity, self._dim, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"StructureConstants(arity={self._arity}, dim={self._dim}, entries={len(self._entries)})"


# ------------------------------------------------------------------
# Brackets
# ------------------------------------------------------------------

def bracket_basis(mu: StructureConstants, indices: Sequence[int]) -> VectorElement:
    """μ(e_{i_1},…,e_{i_n}) with antisymmetric lookup."""
    return VectorElement(mu.vector(indices))


def bracket_eval(mu: StructureConstants, *vectors: VectorElement) -> VectorElement:
    """
    Multilinear evaluation of μ on arbitrary vectors.

    Raises:
        ValueError: on wrong argument count or dimension mismatch
    """
    if len(vectors) != mu.arity:
        raise ValueError(f"Expected {mu.arity} arguments, got {len(vectors)}")
    for v in vectors:
        if v.dim != mu.dim:
            raise ValueError(f"Argument of dim {v.dim} for algebra of dim {mu.dim}")
    total = [Fraction(0)] * mu.dim
    for choice in product(*(v.nonzero() for v in vectors)):
        idx = tuple(i for i, _ in choice)
        if len(set(idx)) != len(idx):
            continue
        weight = Fraction(1)
        for _, c in choice:
            weight *= c
        for k, value in enumerate(mu.vector(idx)):
            if value != 0:
                total[k] += weight * value
    return VectorElement(tuple(total))


# ------------------------------------------------------------------
# Fundamental identity
# ------------------------------------------------------------------

def check_fundamental_identity(mu: StructureConstants, title: str = "fundamental identity",
                               check: str = "fundamental_identity") -> ValidationReport:
    """
    Evaluate the fundamental identity through structure constants.

    For increasing ``I`` (length n−1), ``J`` (length n) and each k, the residual
    is ``Σ_t c^t_J c^k_{I t} − Σ_t Σ_s (−1)^{n−s} c^t_{I j_s} c^k_{J∖j_s, t}``.
    """
    n, m = mu.arity, mu.dim
    report = ValidationReport(title)
    for i_tuple in increasing_tuples(m, n - 1):
        for j_tuple in increasing_tuples(m, n):
            residual = [Fraction(0)] * m
            for t, ct in enumerate(mu.vector(j_tuple), start=1):
                if ct != 0:
                    for k, v in enumerate(mu.vector(i_tuple + (t,))):
                        residual[k] += ct * v
            for s in range(1, n + 1):
                sign = -1 if (n - s) % 2 else 1
                rest = j_tuple[:s - 1] + j_tuple[s:]
                for t, ct in enumerate(mu.vector(i_tuple + (j_tuple[s - 1],)), start=1):
                    if ct != 0:
                        for k, v in enumerate(mu.vector(rest + (t,))):
                            residual[k] -= sign * ct * v
            for k, value in enumerate(residual, start=1):
                if value != 0:
                    report.add(check, (i_tuple, j_tuple, (k,)), value)
    logger.debug(f"{title}: {report.count} violation(s) at arity {n}, dim {m}")
    return report


def fundamental_identity_direct(mu: StructureConstants) -> ValidationReport:
    """Brute-force check of the fundamental identity through ``bracket_eval``."""
    n, m = mu.arity, mu.dim
    report = ValidationReport("fundamental identity (direct)")
    basis = [VectorElement.basis(i, m) for i in range(1, m + 1)]
    for i_tuple in increasing_tuples(m, n - 1):
        xs = [basis[i - 1] for i in i_tuple]
        for j_tuple in increasing_tuples(m, n):
            ys = [basis[j - 1] for j in j_tuple]
            lhs = bracket_eval(mu, *xs, bracket_eval(mu, *ys))
            rhs = VectorElement.zero(m)
            for s in range(n):
                inner = bracket_eval(mu, *xs, ys[s])
                rhs = rhs + bracket_eval(mu, *ys[:s], inner, *ys[s + 1:])
            for k, value in (lhs - rhs).nonzero():
                report.add("fundamental_identity", (i_tuple, j_tuple, (k,)), value)
    return report


def is_n_lie(mu: StructureConstants) -> bool:
    return check_fundamental_identity(mu).ok


# ------------------------------------------------------------------
# Derived algebra and center
# ------------------------------------------------------------------

def derived_algebra(mu: StructureConstants) -> Tuple[np.ndarray, int]:
    """
    Span of all brackets of basis vectors.

    Returns:
        (basis rows in reduced echelon form, dimension)
    """
    vectors = [list(vec) for _, vec in mu.items()]
    if not vectors:
        return linalg.zeros(0, mu.dim), 0
    basis = linalg.row_space(vectors)
    return basis, basis.shape[0]


def center(mu: StructureConstants) -> Tuple[np.ndarray, int]:
    """
    Vectors x with μ(x, e_{i_1},…,e_{i_{n−1}}) = 0 for every (n−1)-tuple.

    Returns:
        (null-space basis rows, dimension)
    """
    n, m = mu.arity, mu.dim
    rows: List[List[Fraction]] = []
    for i_tuple in increasing_tuples(m, n - 1):
        images = [mu.vector((x,) + i_tuple) for x in range(1, m + 1)]
        for k in range(m):
            row = [images[x][k] for x in range(m)]
            if any(v != 0 for v in row):
                rows.append(row)
    basis = linalg.null_space(linalg.as_matrix(rows, m) if rows else linalg.zeros(0, m), m)
    return basis, basis.shape[0]


# ------------------------------------------------------------------
# (n+1)-dimensional helpers
# ------------------------------------------------------------------

def omit(i: int, dim: int) -> IndexTuple:
    """The increasing tuple 1..dim with i removed."""
    return tuple(j for j in range(1, dim + 1) if j != i)


def algebra_matrix(mu: StructureConstants) -> np.ndarray:
    """
    Matrix ``a[i][j] = c^i`` at the tuple omitting j (dim must be n+1).

    Raises:
        ValueError: if dim != arity + 1
    """
    n, m = mu.arity, mu.dim
    if m != n + 1:
        raise ValueError(f"Algebra matrix needs dim = arity + 1 (got arity {n}, dim {m})")
    a = linalg.zeros(m, m)
    for j in range(1, m + 1):
        for i, value in enumerate(mu.vector(omit(j, m))):
            a[i, j - 1] = value
    return a


def filippov_matrix(mu: StructureConstants) -> np.ndarray:
    """
    Matrix G with μ equal to G applied after the generalised cross product.

    ``G[i][j] = (−1)^{n+1+j} a[i][j]``. A basis change P acts by
    ``G ↦ det(P)·P⁻¹ G P⁻ᵀ``.
    """
    n = mu.arity
    a = algebra_matrix(mu)
    g = a.copy()
    for j in range(1, n + 2):
        if (n + 1 + j) % 2:
            for i in range(n + 1):
                g[i, j - 1] = -a[i, j - 1]
    return g
