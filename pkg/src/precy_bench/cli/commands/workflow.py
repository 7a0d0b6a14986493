"""Round trips, composition and cohomology."""

from pathlib import Path
from typing import Optional

import typer

from precy_bench.cli.commands.common import ReportFormat, execute


def roundtrip(
    file: Path = typer.Argument(..., help="Bracket, algebra, P∞ or boundary A∞ file"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Run on failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Go through the correspondence and back, comparing entries and text.

    Example:
        pcy roundtrip data/br.json
    """
    execute(["roundtrip"], [file], report, force=force, output=output, timing=timing)


def compose(
    first: Path = typer.Argument(..., help="Morphism file for φ: A → B"),
    second: Path = typer.Argument(..., help="Morphism file for ψ: B → C"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Build from failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Compose two mixed boundaries and check that the square commutes.

    Example:
        pcy compose data/phi.json data/psi.json
    """
    execute(
        ["compose"], [first, second], report, force=force, output=output, timing=timing
    )


def cohomology(
    file: Path = typer.Argument(..., help="Any file carrying a differential"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Dimensions of the cohomology in every degree.

    Example:
        pcy cohomology data/algebra.json
    """
    execute(["cohomology"], [file], report, timing=timing)


def quasiiso(
    file: Path = typer.Argument(..., help="Morphism file"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Whether φ and both legs of its mixed boundary are quasi-isomorphisms.

    Example:
        pcy quasiiso data/phi.json
    """
    execute(["quasiiso"], [file], report, timing=timing)
