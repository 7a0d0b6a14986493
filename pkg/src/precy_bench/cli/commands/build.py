"""Build commands."""

from pathlib import Path
from typing import Optional

import typer
from typer import Typer

from precy_bench.cli.commands.common import ReportFormat, execute

app: Typer = typer.Typer(help="Construct pre-Calabi-Yau structures")


@app.command("precy")
def build_precy(
    file: Path = typer.Argument(..., help="Algebra or bracket file"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Build from failing input"),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Check SI(n) of the result up to this n"
    ),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Build the pre-Calabi-Yau structure of a double Poisson dg algebra.

    An algebra file gives the square-zero extension with m_3 = 0.

    Examples:
        pcy build precy data/br.json -o data/br.precy.json
        pcy build precy data/mutant.json --force
    """
    execute(
        ["build", "precy"],
        [file],
        report,
        max_n,
        force=force,
        output=output,
        timing=timing,
    )


@app.command("pinf-precy")
def build_pinf_precy(
    file: Path = typer.Argument(..., help="P∞ file, or a degree-0 bracket file"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Build from failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Build the special pre-Calabi-Yau structure of a double P∞ algebra.

    Example:
        pcy build pinf-precy data/family.json -o data/family.precy.json
    """
    execute(
        ["build", "pinf-precy"],
        [file],
        report,
        force=force,
        output=output,
        timing=timing,
    )


@app.command("morphism")
def build_morphism(
    file: Path = typer.Argument(..., help="Morphism file"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Build from failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Build the mixed boundary of a double Poisson morphism and check its legs.

    Example:
        pcy build morphism data/phi.json -o data/phi.boundary.json
    """
    execute(
        ["build", "morphism"], [file], report, force=force, output=output, timing=timing
    )
