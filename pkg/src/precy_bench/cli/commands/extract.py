"""Extraction commands."""

from pathlib import Path
from typing import Optional

import typer
from typer import Typer

from precy_bench.cli.commands.common import ReportFormat, execute

app: Typer = typer.Typer(help="Read brackets off pre-Calabi-Yau structures")


@app.command("bracket")
def extract_bracket(
    file: Path = typer.Argument(..., help="Boundary A∞ structure file"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Extract from failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Recover the double bracket encoded by m_3.

    Example:
        pcy extract bracket data/br.precy.json -o data/br.back.json
    """
    execute(
        ["extract", "bracket"],
        [file],
        report,
        force=force,
        output=output,
        timing=timing,
    )


@app.command("pinf")
def extract_pinf(
    file: Path = typer.Argument(..., help="Boundary A∞ structure file with d = 0"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    force: bool = typer.Option(False, "--force", help="Extract from failing input"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Recover the double P∞ family encoded by the odd operations.

    Example:
        pcy extract pinf data/family.precy.json
    """
    execute(
        ["extract", "pinf"], [file], report, force=force, output=output, timing=timing
    )
