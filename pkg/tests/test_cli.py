"""End-to-end tests for the nlie command line."""

import pytest
import yaml

from src.algebra.bialgebra import Bialgebra, dualize, validate
from src.algebra.extension import check_ad_invariance
from src.algebra.structure import is_n_lie
from src.catalog.examples import example_bialgebra
from src.cli.commands import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, build_parser, run
from src.cli.nlie_format import parse
from src.main import main
from tests.conftest import A3_TEXT, TOP3_TEXT, WORKED_EXAMPLE_TEXT

PERTURBED_TEXT = WORKED_EXAMPLE_TEXT + "delta 1 : 1 3 4 = 1\n"


@pytest.fixture
def cfg(tmp_path):
    """Path of a config file that does not exist yet, so defaults apply."""
    return str(tmp_path / "config.yaml")


@pytest.fixture
def nlie(nlie_file, cfg):
    """Run a command on .nlie text and return (code, output)."""
    def call(command, text, *extra):
        return run([command, nlie_file(text), "--config", cfg, *extra])
    return call


class TestParser:

    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["fuzz", "-n", "2", "-m", "3"])
        assert (args.command, args.n, args.m, args.trials) == ("fuzz", 2, 3, None)

    def test_extend_choices_are_exclusive(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["extend", "x.nlie", "--trivial", "--solve"])

    def test_missing_command(self):
        assert run([]) == (EXIT_USAGE, "")

    def test_version(self, capsys):
        code, _ = run(["--version"])
        assert code == 0
        assert "nlie-toolkit" in capsys.readouterr().out


class TestValidate:

    def test_simple_algebra(self, nlie):
        code, out = nlie("validate", A3_TEXT)
        assert code == EXIT_OK
        assert out.startswith("A_3: OK")

    def test_worked_example(self, nlie):
        assert nlie("validate", WORKED_EXAMPLE_TEXT)[0] == EXIT_OK

    def test_coalgebra(self, nlie):
        assert nlie("validate", TOP3_TEXT)[0] == EXIT_OK

    def test_violation(self, nlie):
        code, out = nlie("validate", PERTURBED_TEXT)
        assert code == EXIT_VIOLATION
        assert "compatibility" in out
        assert "(1,2,4)" in out

    def test_limit(self, nlie):
        code, out = nlie("validate", PERTURBED_TEXT, "--limit", "1")
        assert code == EXIT_VIOLATION
        assert "more" in out

    def test_modules(self, nlie):
        code, out = nlie("validate", A3_TEXT, "--modules")
        assert code == EXIT_OK
        assert "OK" in out

    def test_parse_error(self, nlie):
        assert nlie("validate", "nlie 1\narity 3\ndim 4\nmu 1 1 2 : 3 = 1\n")[0] == EXIT_USAGE

    def test_missing_file(self, cfg, tmp_path):
        assert run(["validate", str(tmp_path / "absent.nlie"), "--config", cfg])[0] == EXIT_USAGE

    def test_form_without_mu(self, nlie):
        assert nlie("validate", TOP3_TEXT + "form 1 1 = 1\n")[0] == EXIT_USAGE

    def test_empty_document(self, nlie):
        assert nlie("validate", "nlie 1\narity 3\ndim 4\n")[0] == EXIT_USAGE

    def test_tensor_cap_from_config(self, nlie_file, tmp_path):
        cfg_path = tmp_path / "capped.yaml"
        cfg_path.write_text(yaml.safe_dump({"verification": {"tensor_route_term_cap": 10}}))
        code, out = run(["validate", nlie_file(WORKED_EXAMPLE_TEXT), "--config", str(cfg_path)])
        assert code == EXIT_OK
        assert "tensor-route checks skipped" in out

    def test_deterministic(self, nlie):
        assert nlie("validate", PERTURBED_TEXT) == nlie("validate", PERTURBED_TEXT)


class TestQueries:

    def test_rank(self, nlie):
        assert nlie("rank", TOP3_TEXT) == (EXIT_OK, "rank: 4\n")

    def test_rank_needs_delta(self, nlie):
        assert nlie("rank", A3_TEXT)[0] == EXIT_USAGE

    def test_classify(self, nlie):
        assert nlie("classify", A3_TEXT) == (EXIT_OK, "class: d:4\n")

    def test_classify_wrong_dimension(self, nlie):
        assert nlie("classify", "nlie 1\narity 3\ndim 5\nmu\n")[0] == EXIT_USAGE


class TestDual:

    def test_dual_of_worked_example(self, nlie):
        code, out = nlie("dual", WORKED_EXAMPLE_TEXT)
        assert code == EXIT_OK
        doc = parse(out)
        expected = dualize(example_bialgebra(3))
        assert doc.mu == expected.mu
        assert doc.delta == expected.delta
        assert doc.comments == ["dual of worked example"]

    def test_output_file(self, nlie, tmp_path):
        target = tmp_path / "dual.nlie"
        code, out = nlie("dual", WORKED_EXAMPLE_TEXT, "-o", str(target))
        assert code == EXIT_OK
        assert out == f"wrote {target}\n"
        assert parse(target.read_text()).arity == 3

    def test_invalid_bialgebra(self, nlie):
        code, out = nlie("dual", PERTURBED_TEXT)
        assert code == EXIT_VIOLATION
        assert "compatibility" in out


class TestExtend:

    def test_trivial(self, nlie):
        code, out = nlie("extend", A3_TEXT, "--trivial")
        assert code == EXIT_OK
        doc = parse(out)
        assert (doc.arity, doc.dim) == (4, 6)
        assert doc.comments[0].startswith("extended basis")
        assert is_n_lie(doc.mu)

    def test_solved_form_round_trips_through_validate(self, nlie, nlie_file, cfg):
        code, out = nlie("extend", A3_TEXT, "--solve")
        assert code == EXIT_OK
        assert parse(out).form is not None
        assert run(["validate", nlie_file(out, "extended.nlie"), "--config", cfg])[0] == EXIT_OK

    def test_form_file(self, nlie, nlie_file):
        form = nlie_file("nlie 1\narity 3\ndim 4\nform 1 1 = -1\nform 2 2 = 1\nform 3 3 = -1\nform 4 4 = 1\n",
                         "form.nlie")
        code, out = nlie("extend", A3_TEXT, "--form", form)
        assert code == EXIT_OK
        assert parse(out).form.is_nondegenerate()

    def test_non_invariant_form(self, nlie, nlie_file):
        form = nlie_file("nlie 1\narity 3\ndim 4\nform 1 1 = 1\n", "form.nlie")
        assert nlie("extend", A3_TEXT, "--form", form)[0] == EXIT_VIOLATION

    def test_bialgebra(self, nlie, nlie_file, cfg):
        code, out = nlie("extend", WORKED_EXAMPLE_TEXT, "--bialgebra", "--solve")
        assert code == EXIT_OK
        doc = parse(out)
        assert validate(Bialgebra(doc.mu, doc.delta)).ok
        assert doc.form is not None
        assert check_ad_invariance(doc.mu, doc.form).ok
        assert run(["validate", nlie_file(out, "extended.nlie"), "--config", cfg])[0] == EXIT_OK

    def test_trivial_bialgebra_has_no_form(self, nlie):
        code, out = nlie("extend", WORKED_EXAMPLE_TEXT, "--bialgebra", "--trivial")
        assert code == EXIT_OK
        assert parse(out).form is None

    def test_bialgebra_needs_delta(self, nlie):
        assert nlie("extend", A3_TEXT, "--bialgebra")[0] == EXIT_USAGE


class TestCatalog:

    def test_list(self, cfg):
        code, out = run(["catalog", "--list", "--config", cfg])
        assert code == EXIT_OK
        assert "three-deltas" in out

    @pytest.mark.parametrize("label, n", [("c2:1/3", 3), ("d:5", 4), ("example", 4), ("top", 2), ("simple", 3)])
    def test_fixture_validates(self, label, n, cfg, nlie_file):
        code, out = run(["catalog", label, "-n", str(n), "--config", cfg])
        assert code == EXIT_OK
        assert run(["validate", nlie_file(out), "--config", cfg])[0] == EXIT_OK

    def test_unknown(self, cfg):
        assert run(["catalog", "nope", "--config", cfg])[0] == EXIT_USAGE


class TestSolvers:

    def test_solve_an(self, cfg):
        code, out = run(["solve-an", "--trials", "1", "--seed", "3", "--config", cfg])
        assert code == EXIT_OK
        assert "result: confirmed" in out

    def test_solve_an_is_deterministic(self, cfg):
        argv = ["solve-an", "--trials", "1", "--seed", "5", "--config", cfg]
        assert run(argv) == run(argv)

    @pytest.mark.slow
    def test_solve_an_hundred_trials_byte_identical(self, cfg):
        argv = ["solve-an", "-n", "3", "--trials", "100", "--seed", "7", "--config", cfg]
        first = run(argv)
        assert first[0] == EXIT_OK
        assert "result: confirmed" in first[1]
        assert run(argv) == first

    def test_solve_an_bad_n(self, cfg):
        assert run(["solve-an", "-n", "2", "--trials", "1", "--config", cfg])[0] == EXIT_USAGE

    def test_fuzz(self, cfg):
        code, out = run(["fuzz", "-n", "3", "-m", "4", "--trials", "3", "--seed", "9", "--config", cfg])
        assert code == EXIT_OK
        assert "all routes agree" in out


class TestMain:

    def test_writes_report_to_stdout(self, nlie_file, cfg, capsys):
        assert main(["rank", nlie_file(TOP3_TEXT), "--config", cfg]) == EXIT_OK
        assert capsys.readouterr().out == "rank: 4\n"

    def test_bad_config_value(self, nlie_file, tmp_path):
        cfg_path = tmp_path / "bad.yaml"
        cfg_path.write_text(yaml.safe_dump({"display": {"width": "wide"}}))
        assert main(["rank", nlie_file(TOP3_TEXT), "--config", str(cfg_path)]) == EXIT_USAGE
