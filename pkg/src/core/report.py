"""Validation reports listing every violated identity with its index data."""

from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from src.core.tensor import TensorElement, format_terms

RESIDUAL_TERM_LIMIT = 6


@dataclass(frozen=True, order=True)
class Violation:
    """A single nonzero residual."""
    check: str
    indices: Tuple[Tuple[int, ...], ...]
    residual: Any = field(compare=False)

    def describe(self) -> str:
        idx = " ".join("(" + ",".join(str(i) for i in group) + ")" for group in self.indices)
        if isinstance(self.residual, TensorElement):
            value = format_terms(self.residual.items(), RESIDUAL_TERM_LIMIT)
        else:
            value = str(self.residual)
        return f"[{self.check}] {idx} -> {value}"


@dataclass
class ValidationReport:
    """Outcome of one or more checks; empty means every identity holds."""
    title: str
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def count(self) -> int:
        return len(self.violations)

    def add(self, check: str, indices: Sequence[Sequence[int]], residual: Any) -> None:
        self.violations.append(Violation(check, tuple(tuple(g) for g in indices), residual))

    def checks(self) -> List[str]:
        return sorted({v.check for v in self.violations})

    def involves(self, indices: Sequence[int], check: Optional[str] = None) -> bool:
        """True if some violation carries ``indices`` as one of its index groups."""
        target = tuple(indices)
        return any(
            target in v.indices and (check is None or v.check == check)
            for v in self.violations
        )

    def sorted(self) -> "ValidationReport":
        return ValidationReport(self.title, sorted(self.violations), list(self.notes))

    @classmethod
    def merge(cls, title: str, reports: Iterable["ValidationReport"]) -> "ValidationReport":
        merged = cls(title)
        for report in reports:
            merged.violations.extend(report.violations)
            merged.notes.extend(report.notes)
        merged.violations.sort()
        return merged

    def render(self, limit: Optional[int] = None) -> str:
        """Deterministic plain-text rendering."""
        lines = [f"{self.title}: " + ("OK" if self.ok else f"{self.count} violation(s)")]
        lines.extend(f"  note: {note}" for note in self.notes)
        shown = self.sorted().violations
        if limit is not None:
            shown = shown[:limit]
        lines.extend("  " + v.describe() for v in shown)
        if limit is not None and self.count > limit:
            lines.append(f"  … {self.count - limit} more")
        return "\n".join(lines)


class PreconditionError(ValueError):
    """Raised when an operation's input fails a required check."""

    def __init__(self, message: str, report: Optional[ValidationReport] = None):
        super().__init__(message)
        self.report = report
