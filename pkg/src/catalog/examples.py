"""Worked coalgebra and bialgebra examples."""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np

from src.algebra.bialgebra import Bialgebra
from src.algebra.coalgebra import Comultiplication
from src.algebra.structure import StructureConstants, omit
from src.algebra.transport import permutation_matrix
from src.core import linalg
from src.core.tensor import IndexTuple


def _tail(n: int) -> Tuple[int, ...]:
    """The indices 4, 5, …, n+1 shared by every wedge in the examples."""
    return tuple(range(4, n + 2))


def _require(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"Example needs n ≥ {minimum}, got {n}")


def example_coalgebra_top(n: int) -> Comultiplication:
    """Δ(e_i) = e_1∧…∧ê_i∧…∧e_{n+1}; a coalgebra of rank n+1."""
    _require(n, 2)
    dim = n + 1
    return Comultiplication.from_images(n, dim, {i: {omit(i, dim): 1} for i in range(1, dim + 1)})


def example_bialgebra(n: int) -> Bialgebra:
    """
    The (n+1)-dimensional bialgebra with
    μ(x_1,x_3,…,x_{n+1}) = x_1, μ(x_2,…,x_{n+1}) = x_2,
    Δ(x_1) = x_3∧x_2∧x_4∧…∧x_{n+1} and Δ(x_3) = x_1∧x_2∧x_4∧…∧x_{n+1}.
    """
    _require(n, 3)
    dim = n + 1
    tail = _tail(n)
    mu = StructureConstants(n, dim, {(1, 3) + tail: {1: 1}, (2, 3) + tail: {2: 1}})
    delta = Comultiplication.from_images(n, dim, {1: {(3, 2) + tail: 1}, 3: {(1, 2) + tail: 1}})
    return Bialgebra(mu, delta)


@dataclass(frozen=True)
class ThreeDeltas:
    """One bracket with three comultiplications and the maps relating them."""
    mu: StructureConstants
    delta1: Comultiplication
    delta2: Comultiplication
    delta3: Comultiplication
    phi12: np.ndarray
    phi13: np.ndarray
    phi23: np.ndarray

    def bialgebra(self, which: int) -> Bialgebra:
        deltas = {1: self.delta1, 2: self.delta2, 3: self.delta3}
        if which not in deltas:
            raise ValueError(f"Choose Δ1, Δ2 or Δ3, got {which}")
        return Bialgebra(self.mu, deltas[which])


def example_three_deltas(n: int) -> ThreeDeltas:
    """
    μ(x_2,…,x_{n+1}) = x_1, μ(x_1,x_3,…,x_{n+1}) = x_2 with

    * Δ1(x_1) = x_1∧x_3∧…, Δ1(x_2) = x_2∧x_3∧…
    * Δ2(x_1) = x_1∧x_2∧…, Δ2(x_3) = x_3∧x_2∧…
    * Δ3(x_2) = x_2∧x_1∧…, Δ3(x_3) = x_3∧x_1∧…

    where "…" is x_4∧…∧x_{n+1}. φ12 maps Δ1 to Δ2, φ13 maps Δ1 to Δ3 and
    φ23 (x_1 ↔ x_2) maps Δ2 to Δ3.
    """
    _require(n, 3)
    dim = n + 1
    tail = _tail(n)
    mu = StructureConstants(n, dim, {omit(1, dim): {1: 1}, omit(2, dim): {2: 1}})
    delta1 = Comultiplication.from_images(n, dim, {1: {(1, 3) + tail: 1}, 2: {(2, 3) + tail: 1}})
    delta2 = Comultiplication.from_images(n, dim, {1: {(1, 2) + tail: 1}, 3: {(3, 2) + tail: 1}})
    delta3 = Comultiplication.from_images(n, dim, {2: {(2, 1) + tail: 1}, 3: {(3, 1) + tail: 1}})
    return ThreeDeltas(
        mu=mu,
        delta1=delta1,
        delta2=delta2,
        delta3=delta3,
        phi12=permutation_matrix({1: 1, 2: 3, 3: 2}, dim),
        phi13=permutation_matrix({1: 2, 2: 3, 3: 1}, dim),
        phi23=permutation_matrix({1: 2, 2: 1}, dim),
    )


# ------------------------------------------------------------------
# Matrix-unit coalgebra
# ------------------------------------------------------------------

def matrix_basis_labels(m: int) -> List[str]:
    """Names of the basis of M(m): off-diagonal units, diagonal differences, identity."""
    labels = [f"E{i}{j}" for i in range(1, m + 1) for j in range(1, m + 1) if i != j]
    labels += [f"H{j}" for j in range(1, m)]
    labels.append("E")
    return labels


def _unit(i: int, j: int, m: int) -> int:
    return (i - 1) * m + (j - 1)


def _change_matrix(m: int) -> np.ndarray:
    """Column b holds the matrix-unit coordinates of basis element b."""
    size = m * m
    columns: List[Dict[int, int]] = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i != j:
                columns.append({_unit(i, j, m): 1})
    for j in range(1, m):
        columns.append({_unit(j, j, m): 1, _unit(j + 1, j + 1, m): -1})
    columns.append({_unit(i, i, m): 1 for i in range(1, m + 1)})
    change = linalg.zeros(size, size)
    for b, column in enumerate(columns):
        for u, value in column.items():
            change[u, b] = value
    return change


def example_coalgebra_matrix(m: int) -> Comultiplication:
    """
    The 3-ary comultiplication on M(m):
    Δ(E_ij) = Σ_k E_kk∧E_ik∧E_kj for i ≠ j,
    Δ(E_ii − E_{i+1,i+1}) = Σ_k E_kk∧E_{i,i+1}∧E_{i+1,i} and Δ(E) = 0,
    re-expressed in the basis of ``matrix_basis_labels``.
    """
    if m < 2:
        raise ValueError(f"Matrix example needs m ≥ 2, got {m}")
    size = m * m
    to_basis = linalg.inverse(_change_matrix(m))

    def coords(i: int, j: int) -> List:
        return list(to_basis[:, _unit(i, j, m)])

    def wedge3(u, v, w) -> Dict[IndexTuple, object]:
        # coefficients of u∧v∧w on increasing basis triples are 3×3 minors
        out = {}
        for key in combinations(range(1, size + 1), 3):
            minor = linalg.as_matrix([[vec[r - 1] for vec in (u, v, w)] for r in key])
            det = linalg.determinant(minor)
            if det != 0:
                out[key] = det
        return out

    def accumulate(target: Dict[IndexTuple, object], terms: Dict[IndexTuple, object]) -> None:
        for key, value in terms.items():
            target[key] = target.get(key, 0) + value

    images: Dict[int, Dict[IndexTuple, object]] = {}
    b = 1
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i == j:
                continue
            image: Dict[IndexTuple, object] = {}
            for k in range(1, m + 1):
                if k in (i, j):
                    continue
                accumulate(image, wedge3(coords(k, k), coords(i, k), coords(k, j)))
            images[b] = image
            b += 1
    for i in range(1, m):
        image = {}
        for k in range(1, m + 1):
            accumulate(image, wedge3(coords(k, k), coords(i, i + 1), coords(i + 1, i)))
        images[b] = image
        b += 1
    return Comultiplication.from_images(3, size, images)
