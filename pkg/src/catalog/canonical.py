"""Canonical (n+1)-dimensional n-Lie algebras and the simple algebra A_n."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from src.algebra.structure import StructureConstants, omit
from src.core.tensor import IndexTuple, to_scalar

KINDS = ("abelian", "b1", "b2", "c1", "c2", "c3", "d")


@dataclass(frozen=True)
class CanonicalLabel:
    """One of abelian, b1, b2, c1, c2(α), c3, d(r)."""
    kind: str
    alpha: Optional[Fraction] = None
    rank: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown label kind '{self.kind}'")
        if self.kind == "c2":
            if self.alpha is None:
                raise ValueError("Label c2 needs a parameter α")
            object.__setattr__(self, "alpha", to_scalar(self.alpha))
            if self.alpha == 0:
                raise ValueError("Label c2 needs α ≠ 0")
        elif self.alpha is not None:
            raise ValueError(f"Label {self.kind} takes no α")
        if self.kind == "d":
            if self.rank is None or self.rank < 3:
                raise ValueError(f"Label d needs r ≥ 3, got {self.rank}")
        elif self.rank is not None:
            raise ValueError(f"Label {self.kind} takes no rank")

    @classmethod
    def parse(cls, text: str) -> "CanonicalLabel":
        """Parse ``abelian``, ``b1``, ``c2:1/3``, ``d:4`` and similar."""
        kind, _, param = text.strip().partition(":")
        kind = kind.strip().lower()
        if kind == "c2":
            if not param:
                raise ValueError("Label c2 needs a parameter, e.g. c2:1/3")
            try:
                return cls("c2", alpha=Fraction(param.strip()))
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"Bad α in label '{text}': {e}") from e
        if kind == "d":
            if not param.strip().isdigit():
                raise ValueError(f"Label d needs an integer rank, e.g. d:4 (got '{text}')")
            return cls("d", rank=int(param))
        if param:
            raise ValueError(f"Label {kind} takes no parameter")
        return cls(kind)

    def __str__(self) -> str:
        if self.kind == "c2":
            return f"c2:{self.alpha}"
        if self.kind == "d":
            return f"d:{self.rank}"
        return self.kind


@dataclass(frozen=True)
class Unclassified:
    """Classifier outcome when the invariants do not pin down a label."""
    reason: str

    def __str__(self) -> str:
        return f"unclassified ({self.reason})"


def _from_omits(n: int, table: Dict[int, Dict[int, object]]) -> StructureConstants:
    dim = n + 1
    entries: Dict[IndexTuple, Dict[int, object]] = {omit(i, dim): image for i, image in table.items()}
    return StructureConstants(n, dim, entries)


def canonical_algebra(n: int, label: CanonicalLabel) -> StructureConstants:
    """
    The listed normal form on an (n+1)-dimensional space.

    ``table[i]`` below is the value of μ on the increasing tuple omitting i.

    Raises:
        ValueError: if n < 3 or d(r) has r > n+1
    """
    if n < 3:
        raise ValueError(f"Canonical forms are listed for n ≥ 3, got {n}")
    if not isinstance(label, CanonicalLabel):
        label = CanonicalLabel.parse(str(label))
    kind = label.kind
    if kind == "abelian":
        table = {}
    elif kind == "b1":
        table = {1: {1: 1}}
    elif kind == "b2":
        table = {n + 1: {1: 1}}
    elif kind == "c1":
        table = {1: {1: 1}, 2: {2: 1}}
    elif kind == "c2":
        table = {1: {1: label.alpha, 2: 1}, 2: {2: 1}}
    elif kind == "c3":
        table = {2: {1: 1}, 1: {2: 1}}
    else:
        if label.rank > n + 1:
            raise ValueError(f"d(r) needs r ≤ n+1 = {n + 1}, got {label.rank}")
        table = {i: {i: 1} for i in range(1, label.rank + 1)}
    return _from_omits(n, table)


def simple_an(n: int, allow_lie: bool = False) -> StructureConstants:
    """
    The simple algebra A_n: μ(e_1,…,ê_i,…,e_{n+1}) = e_i.

    Args:
        n: Arity
        allow_lie: Admit n = 2 (a 3-dimensional simple Lie algebra)
    """
    if n < 2 or (n == 2 and not allow_lie):
        raise ValueError(f"A_n needs n ≥ 3 (n = 2 only with allow_lie), got {n}")
    return _from_omits(n, {i: {i: 1} for i in range(1, n + 2)})


def all_labels(n: int) -> list:
    """Every label admissible at arity n, with α ∈ {1, −2, 1/3} for c2."""
    labels = [CanonicalLabel(k) for k in ("abelian", "b1", "b2", "c1", "c3")]
    labels += [CanonicalLabel("c2", alpha=Fraction(a)) for a in ("1", "-2", "1/3")]
    labels += [CanonicalLabel("d", rank=r) for r in range(3, n + 2)]
    return labels
