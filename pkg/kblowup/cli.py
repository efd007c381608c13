"""
KBlowup CLI - Command-line front door

Parses a ring and an ideal, runs one pipeline through the job service and
prints a report, human-readable (rich) or machine-readable (line format).

Exit codes: 0 success, 1 parse/validation/internal error,
2 hypothesis failure, 3 non-stabilization.
"""
import sys
from enum import Enum
from pathlib import Path
from typing import List, Optional

import click
import typer
from pydantic import ValidationError as SchemaError
from rich.console import Console
from rich.markup import escape
from typer.core import TyperGroup

from kblowup.core.config import settings
from kblowup.core.exceptions import KBlowupException
from kblowup.core.logging import setup_logging
from kblowup.core.report import Report, render_text, report_encoder
from kblowup.services.job_service import Command, JobSpec, job_service, read_spec_file


class KBlowupGroup(TyperGroup):
    """Usage errors exit 1; exit 2 is reserved for hypothesis failures."""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            code = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(1)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(code if isinstance(code, int) else 0)


app = typer.Typer(cls=KBlowupGroup, help="KBlowup: cyclic homology and negative K-theory of isolated singularities")
console = Console()


class OutputFormat(str, Enum):
    TEXT = "text"
    MACHINE = "machine"


VARS = typer.Option(..., "--vars", help="Comma-separated variables, e.g. x,y,z")
IDEAL = typer.Option(None, "--ideal", help="Generator(s); repeatable or comma-separated")
CENTER = typer.Option(None, "--center", help="Blowup center generators (default: the origin)")
I_RANGE = typer.Option(None, "--i", help="Hodge index or range a..b")
N_RANGE = typer.Option(None, "--n", help="Degree or range a..b")
DEGREE_BOUND = typer.Option(None, "--degree-bound", help=f"Filtration window (default {settings.DEGREE_BOUND})")
TRUNCATION = typer.Option(None, "--truncation", help=f"Bicomplex column cut (default {settings.BICOMPLEX_TRUNCATION})")
CECH_WINDOW = typer.Option(None, "--cech-window", help=f"Čech pole-order window (default {settings.CECH_WINDOW})")
FORMAT = typer.Option(OutputFormat.TEXT, "--format", help="Report format")
OUT = typer.Option(None, "--out", help="Write the report to this file instead of stdout")


@app.callback()
def main(
    log_level: str = typer.Option(settings.LOG_LEVEL, "--log-level", help="Log level for stderr"),
):
    """Exact computations over QQ for blowups of isolated singularities."""
    setup_logging(log_level.upper())


def emit(report: Report, fmt: OutputFormat, out: Optional[Path]) -> None:
    if fmt is OutputFormat.MACHINE:
        text = report_encoder.encode_report(report)
        if out:
            out.write_text(text, encoding="utf-8")
        else:
            typer.echo(text, nl=False)
        return
    if out:
        with out.open("w", encoding="utf-8") as handle:
            render_text(report, Console(file=handle, width=120, color_system=None))
    else:
        render_text(report, console)


def execute(command: Command, fmt: OutputFormat, out: Optional[Path], **fields) -> None:
    """Build the JobSpec, run it and exit with the report's code."""
    try:
        spec = JobSpec(command=command, output=out, **fields)
    except (SchemaError, KBlowupException) as exc:
        report = Report(command=command.value)
        report.fail("error", 1, f"invalid job: {exc}")
        emit(report, fmt, out)
        raise typer.Exit(code=1)
    report = job_service.run(spec)
    emit(report, fmt, out)
    if report.exit_code:
        raise typer.Exit(code=report.exit_code)


@app.command("tangent-cone")
def tangent_cone(variables: str = VARS, ideal: Optional[List[str]] = IDEAL,
                 fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """I_min: the ideal of lowest-degree forms."""
    execute(Command.TANGENT_CONE, fmt, out, variables=variables, ideal=ideal)


@app.command("gr")
def gr(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, degree_bound: Optional[int] = DEGREE_BOUND,
       fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Associated graded ring at the origin, compared with k[X]/I_min."""
    execute(Command.GR, fmt, out, variables=variables, ideal=ideal, degree_bound=degree_bound)


@app.command("rees")
def rees(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, center: Optional[List[str]] = CENTER,
         fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Presentation of the Rees algebra R[It]."""
    execute(Command.REES, fmt, out, variables=variables, ideal=ideal, center=center)


@app.command("blowup")
def blowup(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, center: Optional[List[str]] = CENTER,
           fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Blowup square: Y and E charts with smoothness verdicts."""
    execute(Command.BLOWUP, fmt, out, variables=variables, ideal=ideal, center=center)


@app.command("smooth-check")
def smooth_check(variables: str = VARS, ideal: Optional[List[str]] = IDEAL,
                 fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Jacobian criterion, singular locus and the isolated-singularity verdict."""
    execute(Command.SMOOTH_CHECK, fmt, out, variables=variables, ideal=ideal)


@app.command("derham")
def derham(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, degree_bound: Optional[int] = DEGREE_BOUND,
           fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Algebraic de Rham cohomology of a smooth affine algebra."""
    execute(Command.DERHAM, fmt, out, variables=variables, ideal=ideal, degree_bound=degree_bound)


@app.command("hc-bicomplex")
def hc_bicomplex(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, n: Optional[str] = N_RANGE,
                 truncation: Optional[int] = TRUNCATION,
                 fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """HC, HN and HP of a finite-dimensional quotient k[x]/I via the bicomplex."""
    execute(Command.HC_BICOMPLEX, fmt, out, variables=variables, ideal=ideal, n_range=n, truncation=truncation)


@app.command("hodge")
def hodge(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, i: Optional[str] = I_RANGE,
          n: Optional[str] = N_RANGE, degree_bound: Optional[int] = DEGREE_BOUND,
          fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Hodge components of HC, HN and HP of a smooth algebra."""
    execute(Command.HODGE, fmt, out, variables=variables, ideal=ideal, i_range=i, n_range=n,
            degree_bound=degree_bound)


@app.command("michler")
def michler(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, i: Optional[str] = I_RANGE,
            n: Optional[str] = N_RANGE, degree_bound: Optional[int] = DEGREE_BOUND,
            fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Hodge components of HC for a hypersurface with isolated singularities."""
    execute(Command.MICHLER, fmt, out, variables=variables, ideal=ideal, i_range=i, n_range=n,
            degree_bound=degree_bound)


@app.command("hp-six-term")
def hp_six_term(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, center: Optional[List[str]] = CENTER,
                degree_bound: Optional[int] = DEGREE_BOUND, cech_window: Optional[int] = CECH_WINDOW,
                fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Six-term periodic cyclic homology sequence of a blowup square."""
    execute(Command.HP_SIX_TERM, fmt, out, variables=variables, ideal=ideal, center=center,
            degree_bound=degree_bound, cech_window=cech_window)


@app.command("main-theorem")
def main_theorem(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, i: Optional[str] = I_RANGE,
                 n: Optional[str] = N_RANGE, degree_bound: Optional[int] = DEGREE_BOUND,
                 cech_window: Optional[int] = CECH_WINDOW,
                 fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Hypotheses, the Hodge-indexed sequences and the K~ table."""
    execute(Command.MAIN_THEOREM, fmt, out, variables=variables, ideal=ideal, i_range=i, n_range=n,
            degree_bound=degree_bound, cech_window=cech_window)


@app.command("ktilde")
def ktilde(variables: str = VARS, ideal: Optional[List[str]] = IDEAL, cech_window: Optional[int] = CECH_WINDOW,
           fmt: OutputFormat = FORMAT, out: Optional[Path] = OUT):
    """Vanishing range of K~ and the dimension of H^d(Y, O_Y)."""
    execute(Command.KTILDE, fmt, out, variables=variables, ideal=ideal, cech_window=cech_window)


@app.command("run")
def run(spec: Path = typer.Option(..., "--spec", exists=True, dir_okay=False, help="Job file")):
    """
    Run a job file: one command line (command name first), `#` comments allowed.

    Example file:
        # nodal cubic
        main-theorem --vars x,y --ideal "y^2-x^2-x^3"
        --i 0 --n -3..-1 --format machine
    """
    tokens = read_spec_file(spec)
    commands = typer.main.get_command(app).commands
    if not tokens or tokens[0] == "run" or tokens[0] not in commands:
        name = tokens[0] if tokens else ""
        console.print(f"[red]Job file must start with a command name, got {escape(repr(name))}[/red]")
        raise typer.Exit(code=1)
    command = commands[tokens[0]]
    try:
        with command.make_context(tokens[0], tokens[1:]) as ctx:
            command.invoke(ctx)
    except click.UsageError as exc:
        exc.show()
        raise typer.Exit(code=1)


if __name__ == "__main__":
    app()
