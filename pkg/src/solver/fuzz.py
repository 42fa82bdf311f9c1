"""Seeded route-agreement fuzzing.

Both identities are checked two ways: in the tensor power, and through
structure constants. On every random input the two routes must report the
same residuals, entry for entry.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.algebra.bialgebra import (
    Bialgebra,
    compatibility_residual_tensor,
    compatibility_residuals,
    compatibility_residuals_lie,
)
from src.algebra.coalgebra import Comultiplication, check_coalgebra_dual, coalgebra_residual_tensor
from src.algebra.structure import StructureConstants, increasing_tuples
from src.core import linalg
from src.core.tensor import IndexTuple
from src.utils.logger import get_logger

logger = get_logger()


def random_constants(rng: np.random.Generator, n: int, m: int,
                     max_entries: int = 3, max_numerator: int = 3) -> StructureConstants:
    """Sparse random constants: between 1 and ``max_entries`` nonzero values."""
    entries: Dict[IndexTuple, Dict[int, Fraction]] = {}
    for _ in range(int(rng.integers(1, max_entries + 1))):
        key = tuple(sorted(int(i) + 1 for i in rng.choice(m, size=n, replace=False)))
        k = int(rng.integers(1, m + 1))
        value = linalg.random_rational(rng, max_numerator, nonzero=True)
        slot = entries.setdefault(key, {})
        slot[k] = slot.get(k, Fraction(0)) + value
    return StructureConstants(n, m, entries)


@dataclass
class RouteTally:
    """Agreement counts for one pair of routes."""
    name: str
    agree: int = 0
    disagree: int = 0
    valid: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, left: Dict, right: Dict, trial: int) -> None:
        if left == right:
            self.agree += 1
            if not left:
                self.valid += 1
            return
        self.disagree += 1
        differing = sorted(key for key in set(left) | set(right) if left.get(key) != right.get(key))
        self.failures.append(f"trial {trial}: first differing entry {differing[0]}")
        logger.warning(f"{self.name} routes disagree on trial {trial} at {differing[0]}")


@dataclass
class FuzzReport:
    """Aggregated result of ``fuzz_route_agreement``."""
    n: int
    m: int
    trials: int
    seed: int
    coalgebra: RouteTally
    compatibility: RouteTally
    lie: Optional[RouteTally] = None

    @property
    def tallies(self) -> List[RouteTally]:
        return [t for t in (self.coalgebra, self.compatibility, self.lie) if t is not None]

    @property
    def ok(self) -> bool:
        return all(t.disagree == 0 for t in self.tallies)


def coalgebra_routes(d: Comultiplication) -> Tuple[Dict, Dict]:
    """Residuals keyed by (I, J, k) from the tensor route and from the dual bracket."""
    n, m = d.arity, d.dim
    tensor: Dict = {}
    for k in range(1, m + 1):
        residual = coalgebra_residual_tensor(d, k)
        if residual.is_zero():
            continue
        for i_tuple in increasing_tuples(m, n - 1):
            for j_tuple in increasing_tuples(m, n):
                value = residual.coefficient(i_tuple + j_tuple)
                if value != 0:
                    tensor[(i_tuple, j_tuple, (k,))] = value
    dual = {v.indices: v.residual for v in check_coalgebra_dual(d).violations}
    return tensor, dual


def compatibility_routes(b: Bialgebra) -> Tuple[Dict, Dict]:
    """Residuals keyed by (I, J) from the tensor route and from the closed form."""
    n, m = b.arity, b.dim
    tensor: Dict = {}
    for i_tuple in increasing_tuples(m, n):
        residual = compatibility_residual_tensor(b, i_tuple)
        if residual.is_zero():
            continue
        for j_tuple in increasing_tuples(m, n):
            value = residual.coefficient(j_tuple)
            if value != 0:
                tensor[(i_tuple, j_tuple)] = value
    return tensor, compatibility_residuals(b)


def fuzz_route_agreement(n: int, m: int, trials: int, seed: int,
                         max_entries: int = 3, max_numerator: int = 3) -> FuzzReport:
    """
    Draw random comultiplications and (μ, Δ) pairs and compare the routes.

    For n = 2 the closed form is also compared with the Lie-bialgebra
    cocycle formula.

    Raises:
        ValueError: if n < 2, m < n or trials < 1
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if m < n:
        raise ValueError(f"m must be at least n = {n}, got {m}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    logger.info(f"Fuzzing routes at n={n}, m={m}: {trials} trials, seed {seed}")

    report = FuzzReport(
        n, m, trials, seed,
        coalgebra=RouteTally("coalgebra"),
        compatibility=RouteTally("compatibility"),
        lie=RouteTally("lie") if n == 2 else None,
    )
    for trial, child in enumerate(np.random.SeedSequence(seed).spawn(trials), start=1):
        rng = np.random.default_rng(child)
        delta = Comultiplication(random_constants(rng, n, m, max_entries, max_numerator))
        report.coalgebra.record(*coalgebra_routes(delta), trial)

        b = Bialgebra(random_constants(rng, n, m, max_entries, max_numerator),
                      Comultiplication(random_constants(rng, n, m, max_entries, max_numerator)))
        tensor, closed = compatibility_routes(b)
        report.compatibility.record(tensor, closed, trial)
        if report.lie is not None:
            report.lie.record(closed, compatibility_residuals_lie(b), trial)

    logger.info(
        f"Fuzz done: coalgebra {report.coalgebra.agree}/{trials}, "
        f"compatibility {report.compatibility.agree}/{trials} agree"
    )
    return report
