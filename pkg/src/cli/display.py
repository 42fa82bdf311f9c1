"""Display utilities for CLI output.

Everything is drawn on a recording console with colour disabled and a fixed
width, so the exported text is identical from run to run.
"""

import io
from typing import Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.core.report import ValidationReport, Violation
from src.core.tensor import TensorElement, format_terms
from src.solver.an_solver import AnSolverReport
from src.solver.fuzz import FuzzReport

RESIDUAL_TERM_LIMIT = 8


def new_console(width: int = 100) -> Console:
    """A recording console that never writes to the terminal itself."""
    return Console(record=True, width=width, file=io.StringIO(), color_system=None,
                   highlight=False, emoji=False)


def _indices(v: Violation) -> str:
    return " ".join("(" + ",".join(str(i) for i in group) + ")" for group in v.indices)


def _residual(v: Violation) -> str:
    if isinstance(v.residual, TensorElement):
        return format_terms(v.residual.items(), RESIDUAL_TERM_LIMIT)
    return str(v.residual)


def display_report(report: ValidationReport, console: Console, limit: Optional[int] = None) -> None:
    """
    Print a validation report: one status line, then a violation table.

    Args:
        report: Report to show
        console: Rich Console instance
        limit: Show at most this many violations
    """
    status = "OK" if report.ok else f"{report.count} violation(s)"
    console.print(f"{report.title}: {status}")
    for note in report.notes:
        console.print(f"  note: {note}")
    if report.ok:
        return

    table = Table(show_header=True, header_style="bold")
    table.add_column("Check")
    table.add_column("Indices")
    table.add_column("Residual", overflow="fold")
    shown = sorted(report.violations)
    if limit is not None:
        shown = shown[:limit]
    for v in shown:
        table.add_row(v.check, _indices(v), _residual(v))
    console.print(table)
    if limit is not None and report.count > limit:
        console.print(f"… {report.count - limit} more")


def display_value(label: str, value, console: Console) -> None:
    console.print(f"{label}: {value}")


def display_solver_report(report: AnSolverReport, console: Console) -> None:
    """Per-family pass/fail table for the A_n classification run."""
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Family")
    table.add_column("Passed", justify="right")
    table.add_column("Failed", justify="right")
    for tally in report.families.values():
        table.add_row(tally.family, str(tally.passed), str(tally.failed))

    derivation = report.derivation
    console.print(Panel(
        table,
        title=f"A_{report.n} BIALGEBRA CLASSIFICATION ({report.trials} trials, seed {report.seed})",
        border_style="cyan",
    ))
    console.print(
        f"constraint derivation: solution space dim {derivation.dimension}, "
        f"matches constraints: {'yes' if derivation.equal else 'no'}"
    )
    for tally in report.families.values():
        for failure in tally.failures:
            console.print(f"  {tally.family}: {failure}")
    console.print("result: " + ("confirmed" if report.ok else "FAILED"))


def display_fuzz_report(report: FuzzReport, console: Console) -> None:
    """Agreement table for the route fuzzer."""
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Routes")
    table.add_column("Agree", justify="right")
    table.add_column("Disagree", justify="right")
    table.add_column("Both empty", justify="right")
    for tally in report.tallies:
        table.add_row(tally.name, str(tally.agree), str(tally.disagree), str(tally.valid))
    console.print(Panel(
        table,
        title=f"ROUTE AGREEMENT (n={report.n}, m={report.m}, {report.trials} trials, seed {report.seed})",
        border_style="cyan",
    ))
    for tally in report.tallies:
        for failure in tally.failures:
            console.print(f"  {tally.name}: {failure}")
    console.print("result: " + ("all routes agree" if report.ok else "DISAGREEMENT"))


def display_fixture_list(fixtures: List[Dict[str, str]], console: Console) -> None:
    table = Table(show_header=True, header_style="bold")
    table.add_column("Fixture", style="cyan")
    table.add_column("Description")
    for entry in fixtures:
        table.add_row(entry["name"], entry["description"])
    console.print(table)
