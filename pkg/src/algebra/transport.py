"""Basis changes and isomorphism checks.

Matrices use the column convention ``φ(e_c) = Σ_r φ[r][c] e_r``.
"""

from typing import Dict, Mapping

import numpy as np

from src.algebra.coalgebra import Comultiplication
from src.algebra.structure import StructureConstants, VectorElement, bracket_eval, increasing_tuples
from src.core import linalg
from src.core.tensor import map_factors


def permutation_matrix(images: Mapping[int, int], dim: int) -> np.ndarray:
    """
    Matrix of the basis map e_i ↦ e_{images[i]}; unlisted indices are fixed.

    Raises:
        ValueError: if the images do not form a permutation of 1..dim
    """
    target: Dict[int, int] = {i: i for i in range(1, dim + 1)}
    for i, j in images.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"Map {i} -> {j} out of range 1..{dim}")
        target[i] = j
    if sorted(target.values()) != list(range(1, dim + 1)):
        raise ValueError(f"{dict(images)} is not a permutation of 1..{dim}")
    matrix = linalg.zeros(dim, dim)
    for i, j in target.items():
        matrix[j - 1, i - 1] = 1
    return matrix


def _columns(matrix: np.ndarray):
    return [VectorElement(tuple(matrix[:, c])) for c in range(matrix.shape[1])]


def transport_algebra(mu: StructureConstants, p) -> StructureConstants:
    """
    Constants of μ in the basis formed by the columns of P: μ′(x) = P⁻¹μ(Px).

    Raises:
        ValueError: if P is singular or of the wrong size
    """
    matrix = linalg.require_invertible(p, mu.dim)
    inv = linalg.inverse(matrix)
    cols = _columns(matrix)
    entries = {}
    for key in increasing_tuples(mu.dim, mu.arity):
        image = bracket_eval(mu, *(cols[i - 1] for i in key))
        if not image.is_zero():
            entries[key] = image.transform(inv).coefficients
    return StructureConstants(mu.arity, mu.dim, entries)


def transport_comultiplication(d: Comultiplication, phi) -> Comultiplication:
    """Δ₂ = (φ⊗…⊗φ)Δ₁φ⁻¹, the comultiplication making φ a coalgebra isomorphism."""
    matrix = linalg.require_invertible(phi, d.dim)
    inv = linalg.inverse(matrix)
    pushed = [map_factors(d.image(c), matrix) for c in range(1, d.dim + 1)]
    tensors = []
    for l in range(d.dim):
        total = pushed[0].scale(0)
        for c in range(d.dim):
            if inv[c, l] != 0:
                total = total + pushed[c].scale(inv[c, l])
        tensors.append(total)
    return Comultiplication.from_tensors(d.arity, d.dim, tensors)


def check_algebra_iso(phi, mu1: StructureConstants, mu2: StructureConstants) -> bool:
    """
    True iff ``φ μ₁(e_I) = μ₂(φe_{i_1},…,φe_{i_n})`` on all increasing I.

    Raises:
        ValueError: on singular φ or mismatched arity/dimension
    """
    if (mu1.arity, mu1.dim) != (mu2.arity, mu2.dim):
        raise ValueError("Algebras differ in arity or dimension")
    matrix = linalg.require_invertible(phi, mu1.dim)
    cols = _columns(matrix)
    for key in increasing_tuples(mu1.dim, mu1.arity):
        left = VectorElement(mu1.vector(key)).transform(matrix)
        if left != bracket_eval(mu2, *(cols[i - 1] for i in key)):
            return False
    return True


def transport_pair(mu: StructureConstants, d: Comultiplication, phi):
    """Images of (μ, Δ) under φ, so that φ is an equivalence onto the result."""
    matrix = linalg.require_invertible(phi, mu.dim)
    new_mu = transport_algebra(mu, linalg.inverse(matrix))
    return new_mu, transport_comultiplication(d, matrix)

