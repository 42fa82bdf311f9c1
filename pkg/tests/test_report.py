"""Tests for validation reports."""

from fractions import Fraction

from src.core.report import PreconditionError, ValidationReport, Violation
from src.core.tensor import TensorElement


class TestValidationReport:

    def test_empty_is_ok(self):
        report = ValidationReport("empty")
        assert report.ok
        assert report.count == 0
        assert report.render() == "empty: OK"

    def test_add_records_indices(self):
        report = ValidationReport("r")
        report.add("fundamental_identity", [(2, 3), (1, 2, 3), (1,)], Fraction(1))
        assert not report.ok
        assert report.violations[0].indices == ((2, 3), (1, 2, 3), (1,))
        assert report.involves((1, 2, 3))
        assert report.involves((1, 2, 3), check="fundamental_identity")
        assert not report.involves((1, 2, 3), check="coalgebra.dual")

    def test_merge_sorts_by_check_then_indices(self):
        a = ValidationReport("a")
        a.add("z_check", [(1,)], 1)
        b = ValidationReport("b", notes=["skipped"])
        b.add("a_check", [(2,)], 1)
        b.add("a_check", [(1,)], 1)
        merged = ValidationReport.merge("all", [a, b])
        assert [(v.check, v.indices) for v in merged.violations] == [
            ("a_check", ((1,),)), ("a_check", ((2,),)), ("z_check", ((1,),))
        ]
        assert merged.notes == ["skipped"]
        assert merged.checks() == ["a_check", "z_check"]

    def test_render_is_deterministic(self):
        report = ValidationReport("r")
        report.add("c", [(2,)], Fraction(-1, 2))
        report.add("c", [(1,)], TensorElement.basis((1, 2), 2))
        text = report.render()
        assert text.splitlines() == [
            "r: 2 violation(s)",
            "  [c] (1) -> 1·e(1,2)",
            "  [c] (2) -> -1/2",
        ]
        assert report.render(limit=1).endswith("… 1 more")

    def test_sorted_leaves_original_order(self):
        report = ValidationReport("r", notes=["n"])
        report.add("c", [(2,)], 1)
        report.add("b", [(3,)], 1)
        ordered = report.sorted()
        assert [v.check for v in ordered.violations] == ["b", "c"]
        assert [v.check for v in report.violations] == ["c", "b"]
        assert ordered.notes == ["n"]
        assert report.render().splitlines()[2] == "  [b] (3) -> 1"

    def test_violation_ordering_ignores_residual(self):
        assert Violation("c", ((1,),), 5) == Violation("c", ((1,),), 7)


class TestPreconditionError:

    def test_carries_report(self):
        report = ValidationReport("r")
        err = PreconditionError("bad input", report)
        assert isinstance(err, ValueError)
        assert err.report is report
