"""Tests for the job service and the command-line interface."""
import pytest
from typer.testing import CliRunner

from kblowup.cli import app
from kblowup.core.exceptions import ParseError
from kblowup.groebner import ideals_equal
from kblowup.services import Command, JobSpec, job_service, parse_range, read_spec_file
from tests.conftest import ideal_in

runner = CliRunner()
NODAL = "y^2-x^2-x^3"


def invoke(*args: str):
    return runner.invoke(app, ["--log-level", "CRITICAL", *args])


def machine_section(output: str, name: str) -> dict[str, str]:
    lines = output.splitlines()
    body = lines[lines.index(f"#section {name}") + 1]
    return dict(pair.split(":", 1) for pair in body.split("|"))


class TestRanges:
    @pytest.mark.parametrize(
        "text,expected",
        [("-3..-1", [-3, -2, -1]), ("2", [2]), ("1..-1", [-1, 0, 1]), (" 0 .. 2 ", [0, 1, 2])],
    )
    def test_parse_range(self, text, expected):
        assert parse_range(text) == expected

    @pytest.mark.parametrize("text", ["", "a..b", "1...3", "1..2..3"])
    def test_bad_range(self, text):
        with pytest.raises(ParseError):
            parse_range(text)


class TestJobService:
    def test_spec_splits_generators(self):
        spec = JobSpec(command=Command.TANGENT_CONE, variables="x, y", ideal=["x*y, (x+1)*y"])
        assert spec.variables == ("x", "y")
        assert spec.ideal == ["x*y", "(x+1)*y"]
        assert ideals_equal(spec.parsed_center(), ideal_in("x,y", "x", "y"))

    def test_tangent_cone_job(self):
        report = job_service.run(JobSpec(command="tangent-cone", variables="x,y", ideal=[NODAL]))
        assert report.exit_code == 0
        assert report.sections["tangent_cone"]["proper"] is True

    def test_hypothesis_failure_exit_code(self):
        report = job_service.run(JobSpec(command="derham", variables="x,y", ideal=[NODAL]))
        assert (report.status, report.exit_code) == ("hypothesis-failure", 2)

    def test_parse_failure_exit_code(self):
        report = job_service.run(JobSpec(command="tangent-cone", variables="x,y", ideal=["x + w"]))
        assert (report.status, report.exit_code) == ("error", 1)

    def test_unsettled_window_exit_code(self):
        report = job_service.run(JobSpec(command="derham", variables="x,y", ideal=["x*y - 1"], degree_bound=2))
        assert (report.status, report.exit_code) == ("not-stabilized", 3)
        assert not any(row["stable"] for row in report.tables["de_rham"])

    def test_read_spec_file(self, tmp_path):
        path = tmp_path / "job.txt"
        path.write_text('# comment\ntangent-cone --vars x,y\n--ideal "y^2 - x^3"  # cusp\n', encoding="utf-8")
        assert read_spec_file(path) == ["tangent-cone", "--vars", "x,y", "--ideal", "y^2 - x^3"]


class TestCli:
    def test_tangent_cone_machine_output(self):
        result = invoke("tangent-cone", "--vars", "x,y", "--ideal", NODAL, "--format", "machine")
        assert result.exit_code == 0
        assert result.stdout.startswith("command:tangent-cone|status:ok|exit:0")
        section = machine_section(result.stdout, "tangent_cone")
        assert section["proper"] == "T"
        assert ideals_equal(ideal_in("x,y", *section["i_min"].split(";")), ideal_in("x,y", "y^2 - x^2"))

    def test_machine_output_is_deterministic(self):
        args = ("smooth-check", "--vars", "x,y", "--ideal", "y^2-x^3", "--format", "machine")
        assert invoke(*args).stdout == invoke(*args).stdout

    def test_text_output(self):
        result = invoke("smooth-check", "--vars", "x,y", "--ideal", "y^2-x^3")
        assert result.exit_code == 0
        assert "isolated_at_origin" in result.stdout

    def test_hc_bicomplex_of_dual_numbers(self):
        result = invoke("hc-bicomplex", "--vars", "x", "--ideal", "x^2", "--n", "0..1", "--format", "machine")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        table = lines[lines.index("#table cyclic_homology") + 1:]
        assert table[0] == "@count:2"
        assert table[1] == "n,HC,HN,HP,status"
        assert table[2].startswith("0,2,")

    def test_bad_variables_exit_one(self):
        result = invoke("tangent-cone", "--vars", "x,2y", "--ideal", "x", "--format", "machine")
        assert result.exit_code == 1
        assert "status:error|exit:1" in result.stdout

    def test_bad_polynomial_exit_one(self):
        result = invoke("tangent-cone", "--vars", "x,y", "--ideal", "x^(-1)")
        assert result.exit_code == 1

    def test_hypothesis_failure_exit_two(self):
        result = invoke("ktilde", "--vars", "x,y", "--ideal", "y^2-x^3", "--format", "machine")
        assert result.exit_code == 2
        assert machine_section(result.stdout, "hypotheses")["E_smooth"] == "F"

    def test_report_written_to_file(self, tmp_path):
        out = tmp_path / "report.txt"
        result = invoke("rees", "--vars", "x,y", "--ideal", NODAL, "--format", "machine", "--out", str(out))
        assert result.exit_code == 0
        assert result.stdout == ""
        assert out.read_text(encoding="utf-8").startswith("command:rees|status:ok|exit:0")

    def test_run_job_file(self, tmp_path):
        job = tmp_path / "job.txt"
        job.write_text(f'# nodal cubic\ntangent-cone --vars x,y\n--ideal "{NODAL}" --format machine\n',
                       encoding="utf-8")
        result = invoke("run", "--spec", str(job))
        assert result.exit_code == 0
        assert "command:tangent-cone|status:ok" in result.stdout

    def test_run_rejects_unknown_command(self, tmp_path):
        job = tmp_path / "job.txt"
        job.write_text("frobnicate --vars x\n", encoding="utf-8")
        assert invoke("run", "--spec", str(job)).exit_code == 1

    @pytest.mark.slow
    def test_main_theorem_machine_output(self):
        result = invoke("main-theorem", "--vars", "x,y", "--ideal", NODAL, "--i", "0", "--n", "-3..-1",
                        "--format", "machine")
        assert result.exit_code == 0
        assert machine_section(result.stdout, "low_degree")["vanishing_below"] == "-1"
        assert "#table main_sequence_i0" in result.stdout

    def test_run_rejects_unknown_option(self, tmp_path):
        job = tmp_path / "job.txt"
        job.write_text("tangent-cone --vars x,y --ideal x --bogus\n", encoding="utf-8")
        assert invoke("run", "--spec", str(job)).exit_code == 1

    def test_run_missing_job_file(self, tmp_path):
        assert invoke("run", "--spec", str(tmp_path / "absent.txt")).exit_code == 1

    @pytest.mark.parametrize(
        "args",
        [
            ("tangent-cone", "--vars", "x,y", "--ideal", "x", "--bogus"),
            ("tangent-cone", "--ideal", "x"),
            ("frobnicate",),
            ("hc-bicomplex", "--vars", "x", "--ideal", "x^2", "--truncation", "many"),
        ],
    )
    def test_usage_errors_exit_one(self, args):
        assert invoke(*args).exit_code == 1

    def test_help_exits_zero(self):
        assert invoke("--help").exit_code == 0

    def test_unsettled_derham_exit_three(self):
        result = invoke("derham", "--vars", "x,y", "--ideal", "x*y-1", "--degree-bound", "2", "--format", "machine")
        assert result.exit_code == 3
        assert result.stdout.startswith("command:derham|status:not-stabilized|exit:3")
        assert "#table de_rham" in result.stdout
