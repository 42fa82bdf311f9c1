"""Subcommands of the ``nlie`` command line.

``run(argv)`` parses the arguments, executes one command and returns the exit
code with the rendered report text. Exit codes: 0 when every check passes, 1 on
a mathematical violation, 2 on usage or parse errors.
"""

import argparse
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console

from src import __version__
from src.algebra.bialgebra import Bialgebra, dualize, validate
from src.algebra.coalgebra import check_coalgebra_dual, check_coalgebra_tensor, rank
from src.algebra.extension import (
    BilinearForm,
    ExtendedIndexing,
    check_ad_invariance,
    extend_algebra_metric,
    extend_algebra_trivial,
    extend_bialgebra,
    extend_form,
    solve_invariant_forms,
)
from src.algebra.representation import check_rho_modules
from src.algebra.structure import check_fundamental_identity
from src.catalog.classifier import classify
from src.catalog.registry import get_registry
from src.cli.display import (
    display_fixture_list,
    display_fuzz_report,
    display_report,
    display_solver_report,
    display_value,
    new_console,
)
from src.cli.nlie_format import NlieDocument, NlieParseError, emit, parse
from src.core.config import ConfigManager
from src.core.report import PreconditionError, ValidationReport
from src.solver.an_solver import verify_an_classification
from src.solver.fuzz import fuzz_route_agreement
from src.utils.logger import get_logger, setup_logger

logger = get_logger()

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

Handler = Callable[[argparse.Namespace, ConfigManager, Console], int]


class UsageError(ValueError):
    """A command was given input it cannot work on."""


# ------------------------------------------------------------------
# Argument parsing
# ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="YAML config file (default: config/config.yaml)")
    common.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Override the configured log level")

    parser = argparse.ArgumentParser(
        prog="nlie",
        description="Check n-Lie algebras, coalgebras and bialgebras with exact rational arithmetic",
    )
    parser.add_argument("-v", "--version", action="version", version=f"nlie-toolkit v{__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="Run every applicable check on a .nlie file")
    p.add_argument("file")
    p.add_argument("--modules", action="store_true", help="Also check the ρ_s module property of μ")
    p.add_argument("--limit", type=int, default=None, help="Show at most this many violations")

    p = sub.add_parser("rank", parents=[common], help="Print R(Δ) for the comultiplication in a file")
    p.add_argument("file")

    p = sub.add_parser("dual", parents=[common], help="Write the dual bialgebra")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("extend", parents=[common], help="Two-dimensional extension")
    p.add_argument("file")
    choice = p.add_mutually_exclusive_group()
    choice.add_argument("--trivial", action="store_true", help="Use B = 0")
    choice.add_argument("--form", default=None, help=".nlie file holding the invariant form B")
    choice.add_argument("--solve", action="store_true", help="Use the first solved invariant form")
    p.add_argument("--bialgebra", action="store_true", help="Extend μ and Δ together")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("classify", parents=[common], help="Label an (n+1)-dimensional n-Lie algebra")
    p.add_argument("file")

    p = sub.add_parser("catalog", parents=[common], help="Write a named fixture")
    p.add_argument("label", nargs="?", default=None)
    p.add_argument("-n", type=int, default=3, help="Arity (matrix size for 'matrix')")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--list", action="store_true", help="List the fixture names")

    p = sub.add_parser("solve-an", parents=[common], help="Check the A_n bialgebra classification")
    p.add_argument("-n", type=int, default=3)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("fuzz", parents=[common], help="Compare tensor and constant routes on random inputs")
    p.add_argument("-n", type=int, default=3)
    p.add_argument("-m", type=int, default=4)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    return parser


# ------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------

def _load(path: str) -> NlieDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e}") from e
    return parse(text)


def _write_or_print(doc: NlieDocument, output: Optional[str], console: Console) -> None:
    text = emit(doc)
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
        console.print(f"wrote {output}", markup=False, soft_wrap=True)
        logger.info(f"Wrote {output}")
    else:
        console.print(text, markup=False, soft_wrap=True, end="")


def _tensor_route_allowed(arity: int, dim: int, config: ConfigManager) -> bool:
    terms = dim ** (2 * arity - 1)
    if terms > config.tensor_route_term_cap:
        logger.warning(
            f"Tensor route needs up to {terms} terms (cap {config.tensor_route_term_cap}); "
            f"using the structure-constant route only"
        )
        return False
    return True


def _require(value, what: str, command: str):
    if value is None:
        raise UsageError(f"'{command}' needs a file with {what}")
    return value


# ------------------------------------------------------------------
# Commands
# ------------------------------------------------------------------

def cmd_validate(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    doc = _load(args.file)
    tensor = _tensor_route_allowed(doc.arity, doc.dim, config)
    reports: List[ValidationReport] = []

    if doc.mu is not None and doc.delta is not None:
        reports.append(validate(Bialgebra(doc.mu, doc.delta), tensor_route=tensor))
    elif doc.mu is not None:
        reports.append(check_fundamental_identity(doc.mu))
    elif doc.delta is not None:
        reports.append(check_coalgebra_dual(doc.delta))
        if tensor:
            reports.append(check_coalgebra_tensor(doc.delta))
        else:
            reports[-1].notes.append("tensor-route checks skipped")
    else:
        raise UsageError("'validate' needs a file with mu or delta")

    if doc.form is not None:
        if doc.mu is None:
            raise UsageError("form entries need mu entries to check ad-invariance")
        reports.append(check_ad_invariance(doc.mu, doc.form))
    if args.modules and doc.mu is not None:
        reports.extend(check_rho_modules(doc.mu))

    report = ValidationReport.merge(doc.name or Path(args.file).name, reports)
    display_report(report, console, args.limit)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_rank(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    doc = _load(args.file)
    delta = _require(doc.delta, "delta entries", "rank")
    display_value("rank", rank(delta), console)
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    doc = _load(args.file)
    b = Bialgebra(_require(doc.mu, "mu entries", "dual"), _require(doc.delta, "delta entries", "dual"))
    dual = dualize(b)
    comments = [f"dual of {doc.name}"] if doc.name else []
    _write_or_print(NlieDocument(b.arity, b.dim, mu=dual.mu, delta=dual.delta, comments=comments),
                    args.output, console)
    return EXIT_OK


def _choose_form(args: argparse.Namespace, doc: NlieDocument) -> Optional[BilinearForm]:
    """The form B requested on the command line; None means B = 0."""
    if args.trivial:
        return None
    if args.form:
        form = _require(_load(args.form).form, "form entries", "extend --form")
        if form.dim != doc.dim:
            raise UsageError(f"Form of dim {form.dim} for a file of dim {doc.dim}")
        return form
    if args.solve:
        forms = [f for f in solve_invariant_forms(doc.mu) if not f.is_zero()]
        if not forms:
            raise UsageError("No nonzero invariant form exists for this algebra")
        return forms[0]
    return doc.form


def cmd_extend(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    doc = _load(args.file)
    mu = _require(doc.mu, "mu entries", "extend")
    form = _choose_form(args, doc)
    indexing = ExtendedIndexing(doc.dim)
    comments = [indexing.header()] + ([f"extension of {doc.name}"] if doc.name else [])

    if args.bialgebra:
        delta = _require(doc.delta, "delta entries", "extend --bialgebra")
        extended = extend_bialgebra(Bialgebra(mu, delta), form or BilinearForm.zero(doc.dim))
        out = NlieDocument(extended.arity, extended.dim, mu=extended.mu, delta=extended.delta,
                           form=None if form is None else extend_form(form, doc.arity), comments=comments)
    elif form is None:
        bar = extend_algebra_trivial(mu)
        out = NlieDocument(bar.arity, bar.dim, mu=bar, comments=comments)
    else:
        bar = extend_algebra_metric(mu, form)
        out = NlieDocument(bar.arity, bar.dim, mu=bar, form=extend_form(form, doc.arity), comments=comments)
    _write_or_print(out, args.output, console)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    doc = _load(args.file)
    label = classify(_require(doc.mu, "mu entries", "classify"))
    display_value("class", label, console)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    registry = get_registry()
    if args.list or args.label is None:
        display_fixture_list(registry.list_fixtures(), console)
        return EXIT_OK
    fixture = registry.build(args.label, args.n)
    source = fixture.mu if fixture.mu is not None else fixture.delta
    doc = NlieDocument(source.arity, source.dim, mu=fixture.mu, delta=fixture.delta, name=fixture.name)
    _write_or_print(doc, args.output, console)
    return EXIT_OK


def cmd_solve_an(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    defaults = config.solver_config
    trials = args.trials if args.trials is not None else defaults["trials"]
    seed = args.seed if args.seed is not None else defaults["seed"]
    report = verify_an_classification(args.n, trials, seed)
    display_solver_report(report, console)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_fuzz(args: argparse.Namespace, config: ConfigManager, console: Console) -> int:
    defaults = config.fuzz_config
    report = fuzz_route_agreement(
        args.n,
        args.m,
        trials=args.trials if args.trials is not None else defaults["trials"],
        seed=args.seed if args.seed is not None else defaults["seed"],
        max_entries=defaults["max_entries"],
        max_numerator=defaults["max_numerator"],
    )
    display_fuzz_report(report, console)
    return EXIT_OK if report.ok else EXIT_VIOLATION


COMMANDS: Dict[str, Handler] = {
    "validate": cmd_validate,
    "rank": cmd_rank,
    "dual": cmd_dual,
    "extend": cmd_extend,
    "classify": cmd_classify,
    "catalog": cmd_catalog,
    "solve-an": cmd_solve_an,
    "fuzz": cmd_fuzz,
}


def run(argv: Sequence[str]) -> Tuple[int, str]:
    """
    Execute one command.

    Args:
        argv: Arguments without the program name

    Returns:
        (exit code, report text for stdout)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), ""

    config = ConfigManager(args.config)
    setup_logger(args.log_level or config.log_level, config.log_file, force=True)
    console = new_console(config.display_width)
    logger.debug(f"Running '{args.command}'")

    with logger.contextualize(command=args.command):
        try:
            code = COMMANDS[args.command](args, config, console)
        except PreconditionError as e:
            logger.error(str(e))
            if e.report is not None:
                display_report(e.report, console)
            code = EXIT_VIOLATION
        except NlieParseError as e:
            logger.error(f"Parse error: {e}")
            code = EXIT_USAGE
        except (ValueError, TypeError) as e:
            logger.error(str(e))
            code = EXIT_USAGE
    return code, console.export_text()
