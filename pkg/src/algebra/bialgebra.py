"""n-Lie bialgebras: compatibility by two routes, full validation, duals and equivalences."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from src.algebra.coalgebra import (
    Comultiplication,
    check_coalgebra_dual,
    check_coalgebra_iso,
    check_coalgebra_tensor,
    delta_apply,
    dual_algebra,
    dual_comultiplication,
)
from src.algebra.representation import rho_s_apply
from src.algebra.structure import (
    StructureConstants,
    bracket_basis,
    check_fundamental_identity,
    increasing_tuples,
)
from src.algebra.transport import check_algebra_iso
from src.core.report import PreconditionError, ValidationReport
from src.core.tensor import IndexTuple, TensorElement
from src.utils.logger import get_logger

logger = get_logger()

ResidualMap = Dict[Tuple[IndexTuple, IndexTuple], Fraction]


@dataclass(frozen=True)
class Bialgebra:
    """A bracket μ and a comultiplication Δ on the same space."""
    mu: StructureConstants
    delta: Comultiplication

    def __post_init__(self):
        if (self.mu.arity, self.mu.dim) != (self.delta.arity, self.delta.dim):
            raise ValueError(
                f"μ has arity {self.mu.arity}, dim {self.mu.dim} but Δ has "
                f"arity {self.delta.arity}, dim {self.delta.dim}"
            )

    @property
    def arity(self) -> int:
        return self.mu.arity

    @property
    def dim(self) -> int:
        return self.mu.dim

    @classmethod
    def zero(cls, arity: int, dim: int) -> "Bialgebra":
        return cls(StructureConstants.zero(arity, dim), Comultiplication.zero(arity, dim))


# ------------------------------------------------------------------
# Compatibility
# ------------------------------------------------------------------

def compatibility_residual_tensor(b: Bialgebra, indices: IndexTuple) -> TensorElement:
    """``Δμ(e_I) − Σ_s Σ_k (−1)^{n−k} ρ_s(e_{I∖i_k}) Δ(e_{i_k})``."""
    n = b.arity
    residual = delta_apply(b.delta, bracket_basis(b.mu, indices))
    for k in range(1, n + 1):
        sign = -1 if (n - k) % 2 else 1
        rest = indices[:k - 1] + indices[k:]
        image = b.delta.image(indices[k - 1])
        if image.is_zero():
            continue
        for s in range(1, n + 1):
            term = rho_s_apply(b.mu, s, rest, image)
            residual = residual - term if sign == 1 else residual + term
    return residual


def check_compatibility_tensor(b: Bialgebra) -> ValidationReport:
    """Compatibility of μ and Δ evaluated as tensors, one residual per increasing tuple."""
    report = ValidationReport("compatibility (tensor route)")
    for key in increasing_tuples(b.dim, b.arity):
        residual = compatibility_residual_tensor(b, key)
        if not residual.is_zero():
            report.add("compatibility.tensor", (key,), residual)
    logger.debug(f"compatibility tensor route: {report.count} failing tuple(s)")
    return report


def compatibility_residuals(b: Bialgebra) -> ResidualMap:
    """
    Closed-form compatibility residuals on increasing I and J.

    ``Σ_l c^l_I a_l^J − Σ_k (−1)^{n−k} Σ_s Σ_r a_{i_k}^{J[s←r]} c^{j_s}_{I∖i_k, r}``;
    only nonzero values are returned.
    """
    n, m = b.arity, b.dim
    mu, delta = b.mu, b.delta
    out: ResidualMap = {}
    for i_tuple in increasing_tuples(m, n):
        c_top = mu.vector(i_tuple)
        for j_tuple in increasing_tuples(m, n):
            value = Fraction(0)
            for l, c in enumerate(c_top, start=1):
                if c != 0:
                    value += c * delta.coefficient(l, j_tuple)
            for k in range(1, n + 1):
                sign = -1 if (n - k) % 2 else 1
                rest = i_tuple[:k - 1] + i_tuple[k:]
                source = i_tuple[k - 1]
                for s in range(n):
                    for r in range(1, m + 1):
                        a = delta.coefficient(source, j_tuple[:s] + (r,) + j_tuple[s + 1:])
                        if a != 0:
                            value -= sign * a * mu.coefficient(rest + (r,), j_tuple[s])
            if value != 0:
                out[(i_tuple, j_tuple)] = value
    return out


def check_compatibility_constants(b: Bialgebra) -> ValidationReport:
    report = ValidationReport("compatibility (constants route)")
    for (i_tuple, j_tuple), value in sorted(compatibility_residuals(b).items()):
        report.add("compatibility.constants", (i_tuple, j_tuple), value)
    return report


def compatibility_residuals_lie(b: Bialgebra) -> ResidualMap:
    """
    Lie-bialgebra cocycle residuals for n = 2, coded independently.

    ``Σ_l c^l_{i1i2} a_l^{j1j2} − Σ_r ( −a_{i1}^{r j2} c^{j1}_{i2 r} − a_{i1}^{j1 r} c^{j2}_{i2 r}
    + a_{i2}^{r j2} c^{j1}_{i1 r} + a_{i2}^{j1 r} c^{j2}_{i1 r} )``

    Raises:
        ValueError: if the arity is not 2
    """
    if b.arity != 2:
        raise ValueError(f"Lie-bialgebra formula needs arity 2, got {b.arity}")
    m = b.dim
    c = b.mu.coefficient
    a = b.delta.coefficient
    out: ResidualMap = {}
    for i1, i2 in increasing_tuples(m, 2):
        for j1, j2 in increasing_tuples(m, 2):
            lhs = sum((c((i1, i2), l) * a(l, (j1, j2)) for l in range(1, m + 1)), Fraction(0))
            rhs = Fraction(0)
            for r in range(1, m + 1):
                rhs += (
                    - a(i1, (r, j2)) * c((i2, r), j1)
                    - a(i1, (j1, r)) * c((i2, r), j2)
                    + a(i2, (r, j2)) * c((i1, r), j1)
                    + a(i2, (j1, r)) * c((i1, r), j2)
                )
            if lhs != rhs:
                out[((i1, i2), (j1, j2))] = lhs - rhs
    return out


# ------------------------------------------------------------------
# Validation and duality
# ------------------------------------------------------------------

def validate(b: Bialgebra, tensor_route: bool = True) -> ValidationReport:
    """
    Every bialgebra check, all of them always run.

    Args:
        b: Candidate bialgebra
        tensor_route: Run the tensor-power checks as well as the
            structure-constant ones; the CLI turns this off for very large inputs
    """
    reports = [check_fundamental_identity(b.mu), check_coalgebra_dual(b.delta)]
    if tensor_route:
        reports.append(check_coalgebra_tensor(b.delta))
        reports.append(check_compatibility_tensor(b))
    reports.append(check_compatibility_constants(b))
    report = ValidationReport.merge("bialgebra", reports)
    if not tensor_route:
        report.notes.append("tensor-route checks skipped")
    logger.debug(f"validate: {report.count} violation(s) across {len(reports)} checks")
    return report


def dualize(b: Bialgebra, check: bool = True) -> Bialgebra:
    """
    The dual bialgebra (L*, Δ*, μ*).

    Raises:
        PreconditionError: if ``check`` is set and b is not a bialgebra
    """
    if check:
        report = validate(b)
        if not report.ok:
            raise PreconditionError(f"Cannot dualize: {report.count} violation(s)", report)
    return Bialgebra(dual_algebra(b.delta), dual_comultiplication(b.mu))


def check_equivalence_map(phi, b1: Bialgebra, b2: Bialgebra) -> bool:
    """
    True iff φ is both an algebra and a coalgebra isomorphism from b1 to b2.

    Raises:
        ValueError: on singular φ or mismatched shapes
    """
    return check_algebra_iso(phi, b1.mu, b2.mu) and check_coalgebra_iso(phi, b1.delta, b2.delta)
