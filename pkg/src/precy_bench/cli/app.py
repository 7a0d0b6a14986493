"""Main CLI application using Typer."""

import typer
from typer import Typer

from precy_bench import __version__
from precy_bench.cli.commands import build, check, extract, workflow
from precy_bench.cli.ui.console import console, err_console
from precy_bench.core.config import Config
from precy_bench.core.logging import setup_logging

app: Typer = typer.Typer(
    name="pcy",
    help="Exact checks for double Poisson and pre-Calabi-Yau structures",
    add_completion=False,
)

# Register command groups
app.add_typer(check.app, name="check")
app.add_typer(build.app, name="build")
app.add_typer(extract.app, name="extract")

app.command("roundtrip")(workflow.roundtrip)
app.command("compose")(workflow.compose)
app.command("cohomology")(workflow.cohomology)
app.command("quasiiso")(workflow.quasiiso)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"precy-bench version {__version__}", style="bold green")


@app.callback()
def callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """
    precy-bench - verify double brackets, A∞ and pre-Calabi-Yau structures
    with exact rational arithmetic.
    """
    try:
        level: str = Config().log_level
    except ValueError as e:
        err_console.print(f"[red]Configuration error:[/red] {e}")
        raise typer.Exit(2)
    setup_logging("DEBUG" if verbose else level)
