"""n-Lie coalgebras.

A comultiplication ``Δ(x_l) = Σ a_l^{i_1…i_n} x_{i_1}∧…∧x_{i_n}`` is stored as
structure constants whose entry k at tuple I is ``a_k^I``; its dual bracket on
L* therefore has the very same constants.
"""

from fractions import Fraction
from typing import Dict, List, Mapping, Sequence

from src.algebra.structure import (
    StructureConstants,
    VectorElement,
    check_fundamental_identity,
    derived_algebra,
)
from src.core import linalg
from src.core.report import ValidationReport
from src.core.tensor import (
    IndexTuple,
    TensorElement,
    map_factors,
    omega_s,
    to_scalar,
    wedge,
)
from src.utils.logger import get_logger

logger = get_logger()


class Comultiplication:
    """Δ: L → ∧ⁿL given by antisymmetric constants ``a_l^{i_1…i_n}``."""

    def __init__(self, constants: StructureConstants):
        if not isinstance(constants, StructureConstants):
            raise TypeError(f"Expected StructureConstants, got {type(constants).__name__}")
        self._constants = constants

    @classmethod
    def zero(cls, arity: int, dim: int) -> "Comultiplication":
        return cls(StructureConstants.zero(arity, dim))

    @classmethod
    def from_images(cls, arity: int, dim: int,
                    images: Mapping[int, Mapping[Sequence[int], object]]) -> "Comultiplication":
        """
        Build Δ from wedge expansions of basis images.

        Args:
            arity: n
            dim: m
            images: ``{l: {(i_1,…,i_n): coefficient}}`` meaning
                ``Δ(e_l) = Σ coefficient · e_{i_1}∧…∧e_{i_n}``; tuples may be in
                any order and are canonicalized with sign
        """
        entries: Dict[IndexTuple, Dict[int, Fraction]] = {}
        for l, terms in images.items():
            for key, value in terms.items():
                entries.setdefault(tuple(key), {})
                entries[tuple(key)][int(l)] = entries[tuple(key)].get(int(l), Fraction(0)) + to_scalar(value)
        return cls(StructureConstants(arity, dim, entries))

    @classmethod
    def from_tensors(cls, arity: int, dim: int, tensors: Sequence[TensorElement]) -> "Comultiplication":
        """
        Read Δ back from antisymmetric image tensors ``Δ(e_1)…Δ(e_m)``.

        With the unnormalized wedge, ``a_l^J`` is the coefficient of the
        increasing tuple J in Δ(e_l).
        """
        if len(tensors) != dim:
            raise ValueError(f"Expected {dim} image tensors, got {len(tensors)}")
        entries: Dict[IndexTuple, Dict[int, Fraction]] = {}
        for l, tensor in enumerate(tensors, start=1):
            if tensor.order != arity or tensor.dim != dim:
                raise ValueError(f"Image of e_{l} has order {tensor.order}, dim {tensor.dim}")
            for key, value in tensor.items():
                if list(key) == sorted(key) and len(set(key)) == len(key):
                    entries.setdefault(key, {})[l] = value
        return cls(StructureConstants(arity, dim, entries))

    @property
    def constants(self) -> StructureConstants:
        return self._constants

    @property
    def arity(self) -> int:
        return self._constants.arity

    @property
    def dim(self) -> int:
        return self._constants.dim

    def coefficient(self, l: int, indices: Sequence[int]) -> Fraction:
        """``a_l^{i_1…i_n}`` with antisymmetric lookup."""
        return self._constants.coefficient(indices, l)

    def image(self, l: int) -> TensorElement:
        """Δ(e_l) as an order-n tensor."""
        result = TensorElement.zero(self.arity, self.dim)
        for key, vec in self._constants.items():
            if vec[l - 1] != 0:
                result = result + wedge(key, self.dim).scale(vec[l - 1])
        return result

    def images(self) -> List[TensorElement]:
        return [self.image(l) for l in range(1, self.dim + 1)]

    def is_zero(self) -> bool:
        return self._constants.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Comultiplication):
            return NotImplemented
        return self._constants == other._constants

    def __hash__(self) -> int:
        return hash(("delta", self._constants))

    def __repr__(self) -> str:
        return f"Comultiplication(arity={self.arity}, dim={self.dim}, entries={len(self._constants.items())})"


def delta_apply(d: Comultiplication, v: VectorElement) -> TensorElement:
    """Δ(v) for an arbitrary vector (linear extension)."""
    if v.dim != d.dim:
        raise ValueError(f"Vector of dim {v.dim} for comultiplication of dim {d.dim}")
    result = TensorElement.zero(d.arity, d.dim)
    for l, coeff in v.nonzero():
        result = result + d.image(l).scale(coeff)
    return result


def dual_algebra(d: Comultiplication) -> StructureConstants:
    """The bracket Δ* on L*; the constants are shared unchanged."""
    return d.constants


def dual_comultiplication(mu: StructureConstants) -> Comultiplication:
    """μ read as a comultiplication on L*."""
    return Comultiplication(mu)


def check_coalgebra_dual(d: Comultiplication) -> ValidationReport:
    """Coalgebra check through the fundamental identity of the dual bracket."""
    return check_fundamental_identity(dual_algebra(d), title="coalgebra (dual route)",
                                      check="coalgebra.dual")


def iterated_image(d: Comultiplication, k: int) -> TensorElement:
    """(1⊗…⊗1⊗Δ)Δ(e_k): Δ applied to the last factor of every term of Δ(e_k)."""
    n, m = d.arity, d.dim
    images = {}
    terms: Dict[IndexTuple, Fraction] = {}
    for idx, coeff in d.image(k).items():
        last = idx[-1]
        if last not in images:
            images[last] = d.image(last)
        for tail, c2 in images[last].items():
            key = idx[:-1] + tail
            terms[key] = terms.get(key, Fraction(0)) + coeff * c2
    return TensorElement(2 * n - 1, m, terms)


def coalgebra_residual_tensor(d: Comultiplication, k: int) -> TensorElement:
    """``T − Σ_s (−1)^{n−s} ω_s(T)`` for ``T = (1⊗…⊗1⊗Δ)Δ(e_k)``."""
    n = d.arity
    t = iterated_image(d, k)
    residual = t
    for s in range(1, n + 1):
        term = omega_s(t, n, s)
        residual = residual - term if (n - s) % 2 == 0 else residual + term
    return residual


def check_coalgebra_tensor(d: Comultiplication) -> ValidationReport:
    """Coalgebra check in the (2n−1)-fold tensor power, one residual per basis vector."""
    report = ValidationReport("coalgebra (tensor route)")
    for k in range(1, d.dim + 1):
        residual = coalgebra_residual_tensor(d, k)
        if not residual.is_zero():
            report.add("coalgebra.tensor", ((k,),), residual)
    logger.debug(f"coalgebra tensor route: {report.count} failing basis vector(s)")
    return report


def rank(d: Comultiplication) -> int:
    """R(Δ): dimension of the derived algebra of the dual bracket."""
    return derived_algebra(dual_algebra(d))[1]


def check_coalgebra_iso(phi, d1: Comultiplication, d2: Comultiplication) -> bool:
    """
    True iff ``(φ⊗…⊗φ)Δ₁(x) = Δ₂(φx)`` on every basis vector.

    Raises:
        ValueError: on singular φ or mismatched arity/dimension
    """
    if (d1.arity, d1.dim) != (d2.arity, d2.dim):
        raise ValueError("Comultiplications differ in arity or dimension")
    matrix = linalg.require_invertible(phi, d1.dim)
    for l in range(1, d1.dim + 1):
        column = VectorElement(tuple(matrix[:, l - 1]))
        if map_factors(d1.image(l), matrix) != delta_apply(d2, column):
            return False
    return True


def coalgebra_residual_pairing(d: Comultiplication, k: int, dual: Sequence[int]) -> Fraction:
    """Pair a dual (2n−1)-tuple with the tensor-route residual of e_k."""
    return coalgebra_residual_tensor(d, k).coefficient(dual)

