"""Two-dimensional extensions of n-Lie algebras and bialgebras.

An extension adjoins x_{−1} and x_0 to L. Storage order of the extended basis
is fixed: slot 1 holds x_{−1}, slot 2 holds x_0 and slot i+2 holds x_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional

import numpy as np

from src.algebra.bialgebra import Bialgebra, validate
from src.algebra.coalgebra import Comultiplication, dual_algebra
from src.algebra.structure import StructureConstants, check_fundamental_identity, increasing_tuples
from src.core import linalg
from src.core.report import PreconditionError, ValidationReport
from src.core.tensor import IndexTuple
from src.utils.logger import get_logger

logger = get_logger()


class BilinearForm:
    """A symmetric bilinear form B on an m-dimensional space."""

    def __init__(self, matrix):
        """
        Raises:
            ValueError: if the matrix is not square or not symmetric
        """
        arr = linalg.as_matrix(matrix)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"Bilinear form needs a nonempty square matrix, got shape {arr.shape}")
        if not linalg.is_symmetric(arr):
            raise ValueError("Bilinear form must be symmetric")
        self._matrix = arr

    @classmethod
    def zero(cls, dim: int) -> "BilinearForm":
        return cls(linalg.zeros(dim, dim))

    @classmethod
    def identity(cls, dim: int) -> "BilinearForm":
        return cls(linalg.identity(dim))

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix.copy()

    def __call__(self, i: int, j: int) -> Fraction:
        """B(e_i, e_j), 1-based."""
        return self._matrix[i - 1, j - 1]

    def rank(self) -> int:
        return linalg.rank(self._matrix)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim

    def is_zero(self) -> bool:
        return linalg.is_zero(self._matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self._matrix.shape == other._matrix.shape and bool((self._matrix == other._matrix).all())

    def __repr__(self) -> str:
        return f"BilinearForm(dim={self.dim}, rank={self.rank()})"


@dataclass(frozen=True)
class ExtendedIndexing:
    """Logical indices {−1, 0, 1…m} against storage slots {1…m+2}."""
    dim: int

    def slot(self, logical: int) -> int:
        if logical == -1:
            return 1
        if logical == 0:
            return 2
        if 1 <= logical <= self.dim:
            return logical + 2
        raise ValueError(f"Logical index {logical} out of range -1..{self.dim}")

    def logical(self, slot: int) -> int:
        if not 1 <= slot <= self.dim + 2:
            raise ValueError(f"Slot {slot} out of range 1..{self.dim + 2}")
        return slot - 2

    @property
    def size(self) -> int:
        return self.dim + 2

    def header(self) -> str:
        return f"extended basis: x_-1 -> 1, x_0 -> 2, x_i -> i+2 (i = 1..{self.dim})"


def _require_form(mu: StructureConstants, form: BilinearForm) -> None:
    if not isinstance(form, BilinearForm):
        raise TypeError(f"Expected BilinearForm, got {type(form).__name__}")
    if form.dim != mu.dim:
        raise ValueError(f"Form of dim {form.dim} for algebra of dim {mu.dim}")


def check_ad_invariance(mu: StructureConstants, form: BilinearForm) -> ValidationReport:
    """
    ``B(μ(y, x), z) + B(x, μ(y, z)) = 0`` for all basis (n−1)-tuples y and x ≤ z.
    """
    _require_form(mu, form)
    n, m = mu.arity, mu.dim
    report = ValidationReport("ad-invariance")
    for y in increasing_tuples(m, n - 1):
        images = [mu.vector(y + (x,)) for x in range(1, m + 1)]
        for x, z in combinations_with_replacement(range(1, m + 1), 2):
            value = Fraction(0)
            for t in range(1, m + 1):
                value += images[x - 1][t - 1] * form(t, z) + form(x, t) * images[z - 1][t - 1]
            if value != 0:
                report.add("ad_invariance", (y, (x, z)), value)
    return report


def _extend(mu: StructureConstants, form: Optional[BilinearForm], adjoined: int, sink: int) -> StructureConstants:
    """
    Arity-(n+1) constants on L ⊕ span(x_adjoined, x_sink).

    μ̄(x_adjoined, x_I) = μ(x_I); brackets containing the sink vanish; the
    all-L bracket is B(μ(x_{i_1..i_n}), x_{i_{n+1}}) times the sink (zero
    without a form).
    """
    n, m = mu.arity, mu.dim
    size = m + 2
    entries: Dict[IndexTuple, Dict[int, Fraction]] = {}
    for key, vec in mu.items():
        entries[(adjoined,) + tuple(i + 2 for i in key)] = {k + 2: v for k, v in enumerate(vec, start=1) if v != 0}
    if form is not None and not form.is_zero():
        for key in increasing_tuples(m, n + 1):
            head, last = key[:n], key[n]
            value = sum((c * form(t, last) for t, c in enumerate(mu.vector(head), start=1) if c != 0), Fraction(0))
            if value != 0:
                entries[tuple(i + 2 for i in key)] = {sink: value}
    return StructureConstants(n + 1, size, entries)


def extend_algebra_metric(mu: StructureConstants, form: BilinearForm) -> StructureConstants:
    """
    Metric extension: x_0 adjoined, form values land on x_{−1}.

    Raises:
        PreconditionError: if B is not ad-invariant
    """
    _require_form(mu, form)
    report = check_ad_invariance(mu, form)
    if not report.ok:
        raise PreconditionError(f"Form is not ad-invariant ({report.count} violation(s))", report)
    return _extend(mu, form, adjoined=2, sink=1)


def extend_algebra_trivial(mu: StructureConstants, check: bool = True) -> StructureConstants:
    """
    Trivial extension: the metric construction with B = 0.

    Raises:
        PreconditionError: if ``check`` is set and μ fails the fundamental identity
    """
    if check:
        report = check_fundamental_identity(mu)
        if not report.ok:
            raise PreconditionError("Trivial extension needs an n-Lie algebra", report)
    return _extend(mu, None, adjoined=2, sink=1)


def extend_form(form: BilinearForm, arity: int) -> BilinearForm:
    """
    B̄ on the extended space: B on L, B̄(x_0, x_0) = 1 and
    B̄(x_{−1}, x_0) = (−1)^{n−1}; every other pairing with x_0 or x_{−1} vanishes.
    """
    m = form.dim
    out = linalg.zeros(m + 2, m + 2)
    out[2:, 2:] = form.matrix
    out[1, 1] = Fraction(1)
    out[0, 1] = out[1, 0] = Fraction(-1 if (arity - 1) % 2 else 1)
    return BilinearForm(out)


def extend_comultiplication(d: Comultiplication) -> Comultiplication:
    """Δ̄(x_k) = Σ a_k^J x_{−1}∧x_J and Δ̄(x_0) = Δ̄(x_{−1}) = 0."""
    entries: Dict[IndexTuple, Dict[int, Fraction]] = {}
    for key, vec in d.constants.items():
        entries[(1,) + tuple(i + 2 for i in key)] = {l + 2: v for l, v in enumerate(vec, start=1) if v != 0}
    return Comultiplication(StructureConstants(d.arity + 1, d.dim + 2, entries))


def _require_valid(b: Bialgebra) -> None:
    report = validate(b)
    if not report.ok:
        raise PreconditionError(f"Input is not a bialgebra ({report.count} violation(s))", report)


def extend_bialgebra(b: Bialgebra, form: BilinearForm) -> Bialgebra:
    """
    The (m+2)-dimensional (n+1)-ary bialgebra built from b and an invariant B.

    Raises:
        PreconditionError: if b is invalid or B is not ad-invariant for μ
    """
    _require_valid(b)
    mu_bar = extend_algebra_metric(b.mu, form)
    logger.info(f"Extended bialgebra to arity {b.arity + 1}, dim {b.dim + 2}")
    return Bialgebra(mu_bar, extend_comultiplication(b.delta))


def extend_bialgebra_dual(b: Bialgebra, dual_form: BilinearForm) -> Bialgebra:
    """
    Extension driven by a form on L* invariant for the dual bracket Δ*.

    μ̄ is the trivial extension of μ (x_0 adjoined). Δ̄* is the metric extension
    of Δ* with x^{−1} adjoined and form values on x^0. The result is the x_0 ↔ x_{−1}
    relabelling of ``dualize(extend_bialgebra(dualize(b), dual_form))``.

    Raises:
        PreconditionError: if b is invalid or the form is not invariant for Δ*
    """
    _require_valid(b)
    delta_star = dual_algebra(b.delta)
    _require_form(delta_star, dual_form)
    report = check_ad_invariance(delta_star, dual_form)
    if not report.ok:
        raise PreconditionError(f"Dual form is not ad-invariant ({report.count} violation(s))", report)
    mu_bar = _extend(b.mu, None, adjoined=2, sink=1)
    delta_bar = Comultiplication(_extend(delta_star, dual_form, adjoined=1, sink=2))
    return Bialgebra(mu_bar, delta_bar)


def solve_invariant_forms(mu: StructureConstants) -> List[BilinearForm]:
    """
    Basis of the symmetric ad-invariant forms of μ, by exact null space.

    Unknowns are the entries b_{ij} with i ≤ j.
    """
    n, m = mu.arity, mu.dim
    unknowns = list(combinations_with_replacement(range(1, m + 1), 2))
    position = {pair: col for col, pair in enumerate(unknowns)}

    def var(i: int, j: int) -> int:
        return position[(i, j) if i <= j else (j, i)]

    rows: List[List[Fraction]] = []
    for y in increasing_tuples(m, n - 1):
        images = [mu.vector(y + (x,)) for x in range(1, m + 1)]
        for x, z in unknowns:
            row = [Fraction(0)] * len(unknowns)
            for t in range(1, m + 1):
                row[var(t, z)] += images[x - 1][t - 1]
                row[var(x, t)] += images[z - 1][t - 1]
            if any(v != 0 for v in row):
                rows.append(row)
    basis = linalg.null_space(linalg.as_matrix(rows) if rows else linalg.zeros(0, len(unknowns)), len(unknowns))
    forms = []
    for vec in basis:
        matrix = linalg.zeros(m, m)
        for (i, j), value in zip(unknowns, vec):
            matrix[i - 1, j - 1] = value
            matrix[j - 1, i - 1] = value
        forms.append(BilinearForm(matrix))
    logger.debug(f"Invariant forms: {len(forms)}-dimensional space")
    return forms
