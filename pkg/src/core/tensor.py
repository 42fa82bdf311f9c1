"""Exact scalars, index canonicalization and sparse tensor-power elements.

Every coefficient in the package is a ``fractions.Fraction``. Antisymmetric
data is keyed by strictly increasing index tuples; general tensors in
``L^{⊗p}`` are kept as sparse maps from full index tuples to coefficients.
Indices are 1-based throughout.
"""

import numbers
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

Scalar = Fraction
IndexTuple = Tuple[int, ...]


def to_scalar(value) -> Fraction:
    """
    Convert a value to an exact rational.

    Args:
        value: Fraction, integer, or a string such as ``"-3/4"``

    Returns:
        The value as a Fraction in lowest terms

    Raises:
        TypeError: for floats and other inexact or unknown types
        ValueError: for malformed strings
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (float, np.floating)):
        raise TypeError(f"Floating-point value {value!r} rejected; use a Fraction or 'p/q' string")
    raise TypeError(f"Cannot interpret {value!r} as an exact rational")


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    items = list(perm)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign


def canonicalize(indices: Sequence[int]) -> Optional[Tuple[IndexTuple, int]]:
    """
    Sort an index tuple and record the sign of the sorting permutation.

    Args:
        indices: Basis indices in any order

    Returns:
        ``(increasing tuple, ±1)``, or None when an index repeats (the
        alternating value is zero)
    """
    items = tuple(indices)
    if len(set(items)) != len(items):
        return None
    return tuple(sorted(items)), permutation_sign(items)


def kron_det(upper: Sequence[int], lower: Sequence[int]) -> int:
    """
    Generalized Kronecker determinant.

    The determinant of the p×p matrix whose (r, c) entry is
    ``δ(upper[c], lower[r])``.

    Raises:
        ValueError: if the tuples differ in length
    """
    if len(upper) != len(lower):
        raise ValueError(f"Length mismatch: {len(upper)} vs {len(lower)}")
    up = canonicalize(upper)
    low = canonicalize(lower)
    if up is None or low is None or up[0] != low[0]:
        return 0
    return up[1] * low[1]


@lru_cache(maxsize=None)
def _signed_permutations(p: int) -> Tuple[Tuple[IndexTuple, int], ...]:
    return tuple((perm, permutation_sign(perm)) for perm in permutations(range(p)))


@lru_cache(maxsize=None)
def omega_permutation(n: int, s: int) -> IndexTuple:
    """
    Factor positions read by ω_s on the dual side (0-based).

    For a dual tuple ``D = (x_1..x_{n-1}, y_1..y_n)`` the rearranged tuple is
    ``(y_1..ŷ_s..y_n, x_1..x_{n-1}, y_s)``; entry q of the result is
    ``D[perm[q]]``.
    """
    if n < 2 or not 1 <= s <= n:
        raise ValueError(f"Invalid ω index s={s} for arity n={n}")
    ys = [n - 1 + j for j in range(n) if j != s - 1]
    return tuple(ys + list(range(n - 1)) + [n - 1 + s - 1])


class TensorElement:
    """
    Sparse element of the p-fold tensor power of an m-dimensional space.

    Terms are keyed by full index tuples (not necessarily increasing).
    Zero coefficients are never stored, so ``==`` is mathematical equality.
    """

    __slots__ = ("_order", "_dim", "_terms")

    def __init__(self, order: int, dim: int,
                 terms: Optional[Mapping[Sequence[int], object]] = None):
        """
        Args:
            order: Number of tensor factors p
            dim: Dimension m of the underlying space
            terms: Map from index tuples to coefficients

        Raises:
            ValueError: on bad order/dim, wrong tuple length or index out of range
        """
        if order < 1 or dim < 1:
            raise ValueError(f"Tensor order and dim must be positive (got {order}, {dim})")
        collected: Dict[IndexTuple, Fraction] = {}
        for key, value in (terms or {}).items():
            idx = tuple(int(i) for i in key)
            if len(idx) != order:
                raise ValueError(f"Tuple {idx} has length {len(idx)}, expected {order}")
            if any(i < 1 or i > dim for i in idx):
                raise ValueError(f"Tuple {idx} out of range 1..{dim}")
            collected[idx] = collected.get(idx, Fraction(0)) + to_scalar(value)
        self._order = order
        self._dim = dim
        self._terms = {k: v for k, v in collected.items() if v != 0}

    @classmethod
    def _trusted(cls, order: int, dim: int, terms: Dict[IndexTuple, Fraction]) -> "TensorElement":
        obj = cls.__new__(cls)
        obj._order = order
        obj._dim = dim
        obj._terms = {k: v for k, v in terms.items() if v != 0}
        return obj

    @classmethod
    def zero(cls, order: int, dim: int) -> "TensorElement":
        return cls(order, dim)

    @classmethod
    def basis(cls, indices: Sequence[int], dim: int) -> "TensorElement":
        """The rank-one tensor e_{i_1}⊗…⊗e_{i_p}."""
        return cls(len(indices), dim, {tuple(indices): 1})

    @property
    def order(self) -> int:
        return self._order

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Dict[IndexTuple, Fraction]:
        """Copy of the sparse term map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[IndexTuple, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(indices), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: "TensorElement") -> None:
        if not isinstance(other, TensorElement):
            raise TypeError(f"Expected TensorElement, got {type(other).__name__}")
        if (self._order, self._dim) != (other._order, other._dim):
            raise ValueError(
                f"Shape mismatch: order {self._order}/dim {self._dim} vs "
                f"order {other._order}/dim {other._dim}"
            )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + value
        return TensorElement._trusted(self._order, self._dim, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement._trusted(self._order, self._dim, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, factor) -> "TensorElement":
        c = to_scalar(factor)
        return TensorElement._trusted(self._order, self._dim, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, factor) -> "TensorElement":
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self._order, self._dim, self._terms) == (other._order, other._dim, other._terms)

    def __hash__(self) -> int:
        return hash((self._order, self._dim, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TensorElement(order={self._order}, dim={self._dim}, terms={len(self._terms)})"

    def __str__(self) -> str:
        return format_terms(self.items())


def format_terms(items, limit: Optional[int] = None) -> str:
    """Render ``(tuple, coefficient)`` pairs as ``c·e(1,2,3) + …``."""
    items = list(items)
    if not items:
        return "0"
    shown = items if limit is None else items[:limit]
    parts = []
    for idx, coeff in shown:
        label = "e(" + ",".join(str(i) for i in idx) + ")"
        parts.append(f"{coeff}·{label}")
    text = " + ".join(parts)
    if limit is not None and len(items) > limit:
        text += f" + … ({len(items) - limit} more terms)"
    return text


def wedge(indices: Sequence[int], dim: int) -> TensorElement:
    """
    Unnormalized antisymmetrization ``Σ_σ sign(σ) e_{t_σ(1)}⊗…⊗e_{t_σ(p)}``.

    Args:
        indices: Index tuple t (any order, repeats allowed)
        dim: Dimension m

    Returns:
        The wedge as a TensorElement; zero when an index repeats
    """
    p = len(indices)
    canon = canonicalize(indices)
    if canon is None:
        return TensorElement.zero(p, dim)
    base, sign = canon
    if base and (base[0] < 1 or base[-1] > dim):
        raise ValueError(f"Tuple {tuple(indices)} out of range 1..{dim}")
    terms = {tuple(base[i] for i in perm): Fraction(sign * psign) for perm, psign in _signed_permutations(p)}
    return TensorElement._trusted(p, dim, terms)


def omega_s(t: TensorElement, n: int, s: int) -> TensorElement:
    """
    Apply the factor permutation ω_s to an order-(2n−1) tensor.

    The permutation is the adjoint of the dual-side rearrangement, so that
    ``pair(D, omega_s(T)) == pair(D', T)`` with
    ``D' = (y_1..ŷ_s..y_n, x_1..x_{n-1}, y_s)``.

    Raises:
        ValueError: if ``t.order != 2n − 1``
    """
    if t.order != 2 * n - 1:
        raise ValueError(f"ω_s expects order {2 * n - 1}, got {t.order}")
    perm = omega_permutation(n, s)
    out: Dict[IndexTuple, Fraction] = {}
    for idx, coeff in t._terms.items():
        target = [0] * len(perm)
        for q, p in enumerate(perm):
            target[p] = idx[q]
        out[tuple(target)] = coeff
    return TensorElement._trusted(t.order, t.dim, out)


def pair(dual: Sequence[int], t: TensorElement) -> Fraction:
    """
    Dual pairing of a dual basis tuple with a tensor.

    Raises:
        ValueError: on length mismatch
    """
    if len(dual) != t.order:
        raise ValueError(f"Dual tuple length {len(dual)} does not match tensor order {t.order}")
    return t.coefficient(dual)


def apply_to_factor(t: TensorElement, position: int, matrix: np.ndarray) -> TensorElement:
    """
    Apply a linear map to one tensor factor (1-based position).

    ``matrix[r, c]`` is the coefficient of e_{r+1} in the image of e_{c+1}.
    """
    if not 1 <= position <= t.order:
        raise ValueError(f"Factor position {position} outside 1..{t.order}")
    columns = _column_terms(matrix)
    out: Dict[IndexTuple, Fraction] = {}
    pos = position - 1
    for idx, coeff in t._terms.items():
        for r, value in columns[idx[pos] - 1]:
            key = idx[:pos] + (r,) + idx[pos + 1:]
            out[key] = out.get(key, Fraction(0)) + coeff * value
    return TensorElement._trusted(t.order, t.dim, out)


def map_factors(t: TensorElement, matrix: np.ndarray) -> TensorElement:
    """Apply the same linear map to every factor, i.e. (φ⊗…⊗φ)(t)."""
    result = t
    for position in range(1, t.order + 1):
        result = apply_to_factor(result, position, matrix)
    return result


def _column_terms(matrix: np.ndarray):
    m = matrix.shape[1]
    return [
        [(r + 1, to_scalar(matrix[r, c])) for r in range(matrix.shape[0]) if matrix[r, c] != 0]
        for c in range(m)
    ]
