"""Comultiplications on the simple n-Lie algebra A_n.

A comultiplication is parameterized by an (n+1)×(n+1) matrix a with
``Δ(e_i) = Σ_j a_ij · (wedge of all basis vectors except e_j)``. The signed
copy ``b_ij = (−1)^{n+j+1} a_ij`` is the Filippov matrix of the dual bracket.

The bialgebra structures on A_n are exactly those with b skew-symmetric;
they have R(Δ) = 0, or R(Δ) = 2 with a dual of type c3. ``verify_an_classification``
re-derives that statement by running the general checkers on sampled inputs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple

import numpy as np

from src.algebra.bialgebra import (
    Bialgebra,
    check_compatibility_tensor,
    compatibility_residuals,
    validate,
)
from src.algebra.coalgebra import (
    Comultiplication,
    check_coalgebra_dual,
    check_coalgebra_tensor,
    dual_algebra,
    rank,
)
from src.algebra.structure import omit
from src.catalog.canonical import CanonicalLabel, simple_an
from src.catalog.classifier import classify
from src.core import linalg
from src.utils.logger import get_logger

logger = get_logger()


# ------------------------------------------------------------------
# Parameter matrices
# ------------------------------------------------------------------

def _square(matrix, n: int) -> np.ndarray:
    arr = linalg.as_matrix(matrix)
    if arr.shape != (n + 1, n + 1):
        raise ValueError(f"Expected a {n + 1}×{n + 1} matrix for n={n}, got {arr.shape}")
    return arr


def _column_sign(n: int, j: int) -> int:
    return -1 if (n + j + 1) % 2 else 1


@dataclass(frozen=True)
class AnDeltaMatrix:
    """Row i holds the coefficients of Δ(e_i) in the omitted-index wedge basis."""
    n: int
    a: np.ndarray

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        object.__setattr__(self, "a", _square(self.a, self.n))

    @classmethod
    def from_b(cls, n: int, b) -> "AnDeltaMatrix":
        """Inverse of ``b_matrix`` (the sign rule is an involution)."""
        arr = _square(b, n)
        a = arr.copy()
        for j in range(1, n + 2):
            if _column_sign(n, j) < 0:
                a[:, j - 1] = -arr[:, j - 1]
        return cls(n, a)


@dataclass(frozen=True)
class BMatrix:
    """``b_ij = (−1)^{n+j+1} a_ij``."""
    n: int
    b: np.ndarray

    @property
    def is_skew(self) -> bool:
        return linalg.is_skew(self.b)

    @property
    def is_symmetric(self) -> bool:
        return linalg.is_symmetric(self.b)

    @property
    def rank(self) -> int:
        return linalg.rank(self.b)


def an_delta_from_matrix(d: AnDeltaMatrix) -> Comultiplication:
    dim = d.n + 1
    images = {
        i: {omit(j, dim): d.a[i - 1, j - 1] for j in range(1, dim + 1) if d.a[i - 1, j - 1] != 0}
        for i in range(1, dim + 1)
    }
    return Comultiplication.from_images(d.n, dim, images)


def b_matrix(d: AnDeltaMatrix) -> BMatrix:
    b = d.a.copy()
    for j in range(1, d.n + 2):
        if _column_sign(d.n, j) < 0:
            b[:, j - 1] = -d.a[:, j - 1]
    return BMatrix(d.n, b)


def check_an_constraints(d: AnDeltaMatrix) -> bool:
    """``a_kk = 0`` and ``a_ij = (−1)^{i+j+1} a_ji`` for all i, j."""
    size = d.n + 1
    for i in range(1, size + 1):
        if d.a[i - 1, i - 1] != 0:
            return False
        for j in range(i + 1, size + 1):
            sign = -1 if (i + j) % 2 == 0 else 1
            if d.a[i - 1, j - 1] != sign * d.a[j - 1, i - 1]:
                return False
    return True


@dataclass
class CoalgebraCriterion:
    """B-matrix data next to both coalgebra checks for one comultiplication."""
    b_symmetric: bool
    b_rank: int
    dual_route_ok: bool
    tensor_route_ok: bool
    delta_rank: int

    @property
    def routes_agree(self) -> bool:
        return self.dual_route_ok == self.tensor_route_ok

    @property
    def consistent(self) -> bool:
        """[coalgebra and R(Δ) ≥ 3] ⇔ [B symmetric and rank B ≥ 3]."""
        left = self.dual_route_ok and self.delta_rank >= 3
        right = self.b_symmetric and self.b_rank >= 3
        return self.routes_agree and left == right


def coalgebra_B_criterion(d: AnDeltaMatrix) -> CoalgebraCriterion:
    delta = an_delta_from_matrix(d)
    b = b_matrix(d)
    return CoalgebraCriterion(
        b_symmetric=b.is_symmetric,
        b_rank=b.rank,
        dual_route_ok=check_coalgebra_dual(delta).ok,
        tensor_route_ok=check_coalgebra_tensor(delta).ok,
        delta_rank=rank(delta),
    )


# ------------------------------------------------------------------
# Random sampling
# ------------------------------------------------------------------

def random_skew_rank2(rng: np.random.Generator, size: int, max_numerator: int = 3) -> np.ndarray:
    """u·vᵀ − v·uᵀ for random rational u, v, redrawn until the rank is 2."""
    while True:
        u = linalg.random_vector(rng, size, max_numerator)
        v = linalg.random_vector(rng, size, max_numerator)
        skew = linalg.outer(u, v) - linalg.outer(v, u)
        if linalg.rank(skew) == 2:
            return skew


def random_skew_rank4(rng: np.random.Generator, size: int, max_numerator: int = 3) -> np.ndarray:
    """Sum of two independent rank-2 skew matrices, redrawn until the rank is 4."""
    if size < 4:
        raise ValueError(f"Rank 4 needs size ≥ 4, got {size}")
    while True:
        skew = random_skew_rank2(rng, size, max_numerator) + random_skew_rank2(rng, size, max_numerator)
        if linalg.rank(skew) == 4:
            return skew


def random_violating(rng: np.random.Generator, n: int, max_numerator: int = 3) -> AnDeltaMatrix:
    """A random parameter matrix breaking the A_n constraints."""
    while True:
        d = AnDeltaMatrix(n, linalg.random_matrix(rng, n + 1, n + 1, max_numerator))
        if not check_an_constraints(d):
            return d


# ------------------------------------------------------------------
# Constraint derivation
# ------------------------------------------------------------------

@dataclass
class ConstraintDerivation:
    """Solution space of compatibility against the span of the A_n constraints."""
    n: int
    solution_basis: np.ndarray
    constraint_basis: np.ndarray
    equal: bool

    @property
    def dimension(self) -> int:
        return self.solution_basis.shape[0]


def _unit_matrix(n: int, i: int, j: int) -> AnDeltaMatrix:
    a = linalg.zeros(n + 1, n + 1)
    a[i, j] = Fraction(1)
    return AnDeltaMatrix(n, a)


def derive_an_constraints(n: int) -> ConstraintDerivation:
    """
    Solve "compatibility residuals = 0" for the (n+1)² unknowns a_ij exactly
    and compare the solution space with the one cut out by the constraints.
    """
    size = n + 1
    mu = simple_an(n, allow_lie=(n == 2))
    unknowns = [(i, j) for i in range(size) for j in range(size)]
    columns: List[Dict] = [
        compatibility_residuals(Bialgebra(mu, an_delta_from_matrix(_unit_matrix(n, i, j))))
        for i, j in unknowns
    ]
    keys = sorted({key for column in columns for key in column})
    system = [[column.get(key, Fraction(0)) for column in columns] for key in keys]
    solutions = linalg.null_space(system, len(unknowns))

    constraint_rows = []
    for i in range(size):
        row = [Fraction(0)] * len(unknowns)
        row[i * size + i] = Fraction(1)
        constraint_rows.append(row)
        for j in range(i + 1, size):
            # a_ij − (−1)^{i+j+1} a_ji with 1-based i, j
            sign = -1 if (i + j) % 2 == 0 else 1
            row = [Fraction(0)] * len(unknowns)
            row[i * size + j] = Fraction(1)
            row[j * size + i] = Fraction(-sign)
            constraint_rows.append(row)
    constrained = linalg.null_space(constraint_rows, len(unknowns))

    stacked = np.concatenate([solutions, constrained], axis=0)
    equal = (solutions.shape[0] == constrained.shape[0]
             and linalg.rank(stacked) == solutions.shape[0])
    logger.info(f"A_{n} constraints: solution space dim {solutions.shape[0]}, matches constraints: {equal}")
    return ConstraintDerivation(n, solutions, constrained, equal)


# ------------------------------------------------------------------
# End-to-end classification check
# ------------------------------------------------------------------

FAMILIES = ("zero", "skew_rank2", "skew_rank4", "violating")


@dataclass
class FamilyTally:
    """Pass/fail counts for one sampled family."""
    family: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    def record(self, ok: bool, trial: int, message: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(f"trial {trial}: {message}")


@dataclass
class AnSolverReport:
    """Aggregated result of ``verify_an_classification``."""
    n: int
    trials: int
    seed: int
    families: Dict[str, FamilyTally]
    derivation: ConstraintDerivation

    @property
    def ok(self) -> bool:
        return self.derivation.equal and all(t.failed == 0 for t in self.families.values())

    @property
    def total_checks(self) -> int:
        return sum(t.total for t in self.families.values())


def _check_zero(n: int) -> Tuple[bool, str]:
    delta = an_delta_from_matrix(AnDeltaMatrix(n, linalg.zeros(n + 1, n + 1)))
    b = Bialgebra(simple_an(n), delta)
    report = validate(b)
    ok = report.ok and rank(delta) == 0
    return ok, "" if ok else f"zero Δ rejected: {report.count} violation(s)"


def _check_rank2(n: int, rng: np.random.Generator) -> Tuple[bool, str]:
    d = AnDeltaMatrix.from_b(n, random_skew_rank2(rng, n + 1))
    delta = an_delta_from_matrix(d)
    if not check_an_constraints(d):
        return False, "skew B does not satisfy the constraints"
    report = validate(Bialgebra(simple_an(n), delta))
    if not report.ok:
        return False, f"skew rank-2 B rejected: {report.checks()}"
    r = rank(delta)
    if r != 2 or r != b_matrix(d).rank:
        return False, f"R(Δ) = {r}, expected 2"
    label = classify(dual_algebra(delta))
    if label != CanonicalLabel("c3"):
        return False, f"dual classified as {label}"
    return True, ""


def _check_rank4(n: int, rng: np.random.Generator) -> Tuple[bool, str]:
    delta = an_delta_from_matrix(AnDeltaMatrix.from_b(n, random_skew_rank4(rng, n + 1)))
    dual_ok = check_coalgebra_dual(delta).ok
    tensor_ok = check_coalgebra_tensor(delta).ok
    ok = not dual_ok and not tensor_ok
    return ok, "" if ok else f"skew rank-4 B accepted (dual {dual_ok}, tensor {tensor_ok})"


def _check_violating(n: int, rng: np.random.Generator) -> Tuple[bool, str]:
    d = random_violating(rng, n)
    report = check_compatibility_tensor(Bialgebra(simple_an(n), an_delta_from_matrix(d)))
    if report.ok:
        return False, "constraint-violating a passed compatibility"
    return True, ""


def verify_an_classification(n: int, trials: int, seed: int) -> AnSolverReport:
    """
    Sample every family per trial and check the expected outcome.

    Families: the zero matrix; skew B of rank 2 (valid, R(Δ) = 2, dual of type
    c3); skew B of rank 4 (both coalgebra checks fail); a matrix breaking the
    constraints (compatibility fails). Each trial draws from its own
    ``SeedSequence`` child so results do not depend on evaluation order.

    Raises:
        ValueError: if n < 3 or trials < 1
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    logger.info(f"Verifying A_{n} bialgebra classification: {trials} trials, seed {seed}")
    tallies = {name: FamilyTally(name) for name in FAMILIES}

    ok, message = _check_zero(n)
    tallies["zero"].record(ok, 0, message)

    for trial, child in enumerate(np.random.SeedSequence(seed).spawn(trials), start=1):
        rng = np.random.default_rng(child)
        for family, check in (("skew_rank2", _check_rank2), ("skew_rank4", _check_rank4),
                              ("violating", _check_violating)):
            ok, message = check(n, rng)
            tallies[family].record(ok, trial, message)
            if not ok:
                logger.warning(f"{family} trial {trial}: {message}")

    derivation = derive_an_constraints(n)
    report = AnSolverReport(n, trials, seed, tallies, derivation)
    logger.info(f"A_{n} classification {'confirmed' if report.ok else 'FAILED'} over {report.total_checks} checks")
    return report


def exhaustive_constraint_grid(n: int = 3, values=(-1, 0, 1), free_rows: int = 2) -> Tuple[int, int]:
    """
    Compare the constraints with compatibility on every matrix whose first
    ``free_rows`` rows take entries from ``values`` (other rows zero).

    Returns:
        (cases checked, disagreements)
    """
    size = n + 1
    mu = simple_an(n)
    checked = disagreements = 0
    for entries in product(values, repeat=free_rows * size):
        a = linalg.zeros(size, size)
        for pos, value in enumerate(entries):
            a[pos // size, pos % size] = Fraction(value)
        d = AnDeltaMatrix(n, a)
        compatible = not compatibility_residuals(Bialgebra(mu, an_delta_from_matrix(d)))
        if compatible != check_an_constraints(d):
            disagreements += 1
        checked += 1
    return checked, disagreements
