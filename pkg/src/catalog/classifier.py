"""Classification of (n+1)-dimensional n-Lie algebras into canonical labels.

Everything is read off the Filippov matrix G (μ = G ∘ cross product). A basis
change P acts by ``G ↦ det(P)·P⁻¹ G P⁻ᵀ``, so rank, symmetry and the
2×2 invariants used below are exact basis-independent data.
"""

from itertools import combinations
from typing import Union

import numpy as np

from src.algebra.structure import (
    StructureConstants,
    center,
    check_fundamental_identity,
    derived_algebra,
    filippov_matrix,
)
from src.catalog.canonical import CanonicalLabel, Unclassified
from src.core import linalg
from src.core.report import PreconditionError
from src.utils.logger import get_logger

logger = get_logger()

Classification = Union[CanonicalLabel, Unclassified]


def _derived_in_center(mu: StructureConstants) -> bool:
    derived, d1 = derived_algebra(mu)
    centre, z = center(mu)
    if z == 0:
        return d1 == 0
    return linalg.rank(np.concatenate([centre, derived], axis=0)) == z


def _classify_rank_two(g: np.ndarray) -> Classification:
    if linalg.rank(np.concatenate([g, g.T], axis=0)) != 2:
        return Unclassified("row and column spaces of the Filippov matrix differ")
    size = g.shape[0]
    for i, j in combinations(range(size), 2):
        block = g[np.ix_([i, j], [i, j])]
        det = linalg.determinant(block)
        if det == 0:
            continue
        kappa = (block[0, 1] - block[1, 0]) / 2
        symmetric_zero = block[0, 0] == 0 and block[1, 1] == 0 and block[0, 1] + block[1, 0] == 0
        if symmetric_zero:
            return CanonicalLabel("c3")
        if kappa == 0:
            return CanonicalLabel("c1")
        return CanonicalLabel("c2", alpha=-det / (4 * kappa * kappa))
    return Unclassified("no nonsingular principal 2×2 block")


def classify(mu: StructureConstants) -> Classification:
    """
    Label an (n+1)-dimensional n-Lie algebra.

    Raises:
        ValueError: if dim != n + 1
        PreconditionError: if μ fails the fundamental identity
    """
    n, m = mu.arity, mu.dim
    if m != n + 1:
        raise ValueError(f"classify needs dim = n + 1 (got arity {n}, dim {m})")
    report = check_fundamental_identity(mu)
    if not report.ok:
        raise PreconditionError(f"Not an n-Lie algebra ({report.count} violation(s))", report)

    g = filippov_matrix(mu)
    d1 = linalg.rank(g)
    logger.debug(f"classify: arity {n}, derived dimension {d1}")
    if d1 == 0:
        return CanonicalLabel("abelian")
    if n < 3:
        return Unclassified("normal forms are listed for n ≥ 3 only")
    if d1 == 1:
        return CanonicalLabel("b1") if _derived_in_center(mu) else CanonicalLabel("b2")
    if d1 == 2:
        return _classify_rank_two(g)
    if linalg.is_symmetric(g):
        return CanonicalLabel("d", rank=d1)
    return Unclassified(f"derived dimension {d1} with non-symmetric Filippov matrix")
