"""Adjoint operators and the tensor-factor representations ρ_s of an n-Lie algebra."""

from fractions import Fraction
from itertools import product
from typing import List, Sequence

import numpy as np

from src.algebra.structure import (
    StructureConstants,
    VectorElement,
    bracket_basis,
    bracket_eval,
    increasing_tuples,
)
from src.core import linalg
from src.core.report import ValidationReport
from src.core.tensor import TensorElement, apply_to_factor
from src.utils.logger import get_logger

logger = get_logger()


def ad_operator(mu: StructureConstants, indices: Sequence[int]) -> np.ndarray:
    """
    Matrix of y ↦ μ(e_{t_1},…,e_{t_{n−1}}, y).

    Args:
        mu: Structure constants
        indices: The (n−1)-tuple t

    Returns:
        m×m object matrix; column c is the image of e_{c+1}
    """
    t = tuple(indices)
    if len(t) != mu.arity - 1:
        raise ValueError(f"ad needs {mu.arity - 1} indices, got {len(t)}")
    m = mu.dim
    out = linalg.zeros(m, m)
    for y in range(1, m + 1):
        for k, value in enumerate(bracket_basis(mu, t + (y,)).coefficients):
            out[k, y - 1] = value
    return out


def ad_matrix(mu: StructureConstants, vectors: Sequence[VectorElement]) -> np.ndarray:
    """Matrix of y ↦ μ(v_1,…,v_{n−1}, y) for arbitrary vectors."""
    if len(vectors) != mu.arity - 1:
        raise ValueError(f"ad needs {mu.arity - 1} arguments, got {len(vectors)}")
    m = mu.dim
    out = linalg.zeros(m, m)
    for y in range(1, m + 1):
        image = bracket_eval(mu, *vectors, VectorElement.basis(y, m))
        for k, value in enumerate(image.coefficients):
            out[k, y - 1] = value
    return out


def rho_s_apply(mu: StructureConstants, s: int, indices: Sequence[int], tensor: TensorElement) -> TensorElement:
    """
    ρ_s(e_t): apply ad(e_t) to factor s of an order-n tensor.

    Raises:
        ValueError: if s is out of range or the tensor shape does not match μ
    """
    if tensor.order != mu.arity:
        raise ValueError(f"ρ_s acts on order-{mu.arity} tensors, got order {tensor.order}")
    if tensor.dim != mu.dim:
        raise ValueError(f"Tensor dim {tensor.dim} does not match algebra dim {mu.dim}")
    if not 1 <= s <= mu.arity:
        raise ValueError(f"s must lie in 1..{mu.arity}, got {s}")
    return apply_to_factor(tensor, s, ad_operator(mu, indices))


def _witness(report: ValidationReport, check: str, groups, s: int, diff: np.ndarray, n: int, m: int) -> None:
    # first basis tensor on which the operator difference is nonzero
    for idx in product(range(1, m + 1), repeat=n):
        residual = apply_to_factor(TensorElement.basis(idx, m), s, diff)
        if not residual.is_zero():
            report.add(check, tuple(groups) + (idx,), residual)
            return


def check_rho_module(mu: StructureConstants, s: int) -> ValidationReport:
    """
    Verify that ρ_s is a representation of μ on the n-fold tensor power.

    Two operator relations are checked on all basis tuples:

    * ``[ρ(x), ρ(z)] = Σ_t ρ(z_1,…,μ(x, z_t),…,z_{n−1})``
    * ``ρ(μ(y), x_1,…,x_{n−2}) = Σ_t (−1)^{n−t} ρ(y∖y_t)·ρ(y_t, x_1,…,x_{n−2})``

    Each failing relation is reported with the first basis tensor it
    moves to a nonzero residual.
    """
    n, m = mu.arity, mu.dim
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in 1..{n}, got {s}")
    report = ValidationReport(f"ρ_{s} module")
    basis = [VectorElement.basis(i, m) for i in range(1, m + 1)]
    pairs = list(increasing_tuples(m, n - 1))
    ads = {t: ad_operator(mu, t) for t in pairs}

    for x in pairs:
        for z in pairs:
            diff = linalg.matmul(ads[x], ads[z]) - linalg.matmul(ads[z], ads[x])
            xs = [basis[i - 1] for i in x]
            for t in range(n - 1):
                zs = [basis[i - 1] for i in z]
                zs[t] = bracket_eval(mu, *xs, zs[t])
                diff = diff - ad_matrix(mu, zs)
            if not linalg.is_zero(diff):
                _witness(report, "rho_module.commutator", (x, z), s, diff, n, m)

    for y in increasing_tuples(m, n):
        top = bracket_basis(mu, y)
        for x in increasing_tuples(m, n - 2):
            xs = [basis[i - 1] for i in x]
            diff = ad_matrix(mu, [top] + xs)
            for t in range(1, n + 1):
                sign = -1 if (n - t) % 2 else 1
                rest = y[:t - 1] + y[t:]
                inner = ad_matrix(mu, [basis[y[t - 1] - 1]] + xs)
                diff = diff - sign * linalg.matmul(ads[rest], inner)
            if not linalg.is_zero(diff):
                _witness(report, "rho_module.product", (y, x), s, diff, n, m)

    logger.debug(f"ρ_{s} module check: {report.count} violation(s)")
    return report


def check_rho_modules(mu: StructureConstants) -> List[ValidationReport]:
    """Run ``check_rho_module`` for every s = 1…n."""
    return [check_rho_module(mu, s) for s in range(1, mu.arity + 1)]
