"""Check commands."""

from pathlib import Path
from typing import Optional

import typer
from typer import Typer

from precy_bench.cli.commands.common import ReportFormat, UltraMode, execute

app: Typer = typer.Typer(help="Verify axioms of a workbench file")


@app.command("dpa")
def check_dpa(
    file: Path = typer.Argument(..., help="Algebra or bracket file"),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Check the dg algebra axioms and the double Poisson axioms.

    Examples:
        pcy check dpa data/zero-bracket.json
        pcy check dpa data/br.json --report json
    """
    execute(["check", "dpa"], [file], report, timing=timing)


@app.command("pinf")
def check_pinf(
    file: Path = typer.Argument(..., help="P∞ file, or a degree-0 bracket file"),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Check DJac∞ up to this arity"
    ),
    ultra: UltraMode = typer.Option(
        UltraMode.generators, "--ultra", help="Permutations checked for antisymmetry"
    ),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Check antisymmetry, DLeib∞ and DJac∞ of a double P∞ family.

    Example:
        pcy check pinf data/family.json --ultra full
    """
    execute(["check", "pinf"], [file], report, max_n, ultra, timing=timing)


@app.command("ainfty")
def check_ainfty(
    file: Path = typer.Argument(..., help="A∞ structure file"),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Check SI(n) up to this n"
    ),
    ultra: UltraMode = typer.Option(
        UltraMode.generators, "--ultra", help="Permutations checked for ultracyclicity"
    ),
    report: Optional[ReportFormat] = typer.Option(
        None, "--report", help="Report format"
    ),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
) -> None:
    """
    Check the Stasheff identities, cyclicity and the structural predicates.

    Examples:
        pcy check ainfty data/s.json --max-n 5
        pcy check ainfty data/s.json --ultra full --report json
    """
    execute(["check", "ainfty"], [file], report, max_n, ultra, timing=timing)
