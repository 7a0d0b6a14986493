"""Options and the runner shared by every command."""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError as SettingsError

from precy_bench.cli.ui.console import console, err_console
from precy_bench.cli.ui.render import render_report
from precy_bench.core.config import Config
from precy_bench.core.orchestrator import Workbench
from precy_bench.models.run import EXIT_INPUT_ERROR, RunReport
from precy_bench.storage.factory import StorageFactory


class ReportFormat(str, Enum):
    text = "text"
    json = "json"


class UltraMode(str, Enum):
    generators = "generators"
    full = "full"


def execute(
    command: list[str],
    files: list[Path],
    report_format: Optional[ReportFormat],
    max_n: Optional[int] = None,
    mode: UltraMode = UltraMode.generators,
    force: bool = False,
    output: Optional[Path] = None,
    timing: bool = False,
) -> None:
    """Run one workbench command, render its report and exit with its code."""
    try:
        config: Config = Config()
    except SettingsError as e:
        err_console.print(f"[red]Configuration error:[/red] {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    fmt: str = (
        report_format.value if report_format is not None else config.report_format
    )

    try:
        workbench: Workbench = Workbench(config, StorageFactory.create("file", config))
        if fmt == "text":
            with console.status(f"[bold blue]Running {' '.join(command)}..."):
                report: RunReport = workbench.run(
                    command, files, max_n, mode.value, force, output, timing
                )
        else:
            report = workbench.run(
                command, files, max_n, mode.value, force, output, timing
            )
    except Exception as e:
        err_console.print(f"[red]Unexpected error:[/red] {e}")
        err_console.print_exception()
        raise typer.Exit(1)

    render_report(report, fmt)
    if report.exit_code:
        raise typer.Exit(report.exit_code)
