"""Report rendering: JSON for machines, Rich tables for people."""

import json
from typing import Any

import typer
from rich.table import Table

from precy_bench.cli.ui.console import console
from precy_bench.models.run import EXIT_INPUT_ERROR, RunReport


def report_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)


def _witness_text(result: dict[str, Any]) -> str:
    witness: Any = result.get("witness")
    if witness is None:
        return result.get("detail", "")
    args: str = ", ".join(witness["args"])
    terms: str = " + ".join(
        f"{term['coeff']}·{' ⊗ '.join(term['factors']) or '1'}"
        for term in witness["defect"]
    )
    return f"({args}) ↦ {terms}"


def render_text(report: RunReport) -> None:
    """Human rendering of the same data as `report_json`."""
    data: dict[str, Any] = report.to_dict()
    console.rule(f"[bold blue]{' '.join(data['command'])}")
    for section in data["sections"]:
        table: Table = Table(title=section["subject"], title_justify="left")
        table.add_column("Check", style="check", no_wrap=True)
        table.add_column("Verdict")
        table.add_column("Witness", style="witness")
        for result in section["results"]:
            verdict: str = (
                "[passed]pass[/passed]" if result["passed"] else "[failed]FAIL[/failed]"
            )
            table.add_row(result["name"], verdict, _witness_text(result))
        console.print(table)
        for note in section["notes"]:
            console.print(f"[note]note:[/note] {note}")

    if data["predicates"]:
        predicates: str = ", ".join(data["predicates"])
        console.print(f"[predicate]Predicates:[/predicate] {predicates}")
    for name, values in data.get("data", {}).items():
        table = Table(title=name, title_justify="left")
        table.add_column("Degree", justify="right")
        table.add_column("Dimension", justify="right")
        for degree, dim in values.items():
            table.add_row(degree, str(dim))
        console.print(table)
    for name, artifact in data.get("artifacts", {}).items():
        if isinstance(artifact, str):
            console.print(f"[passed]Wrote {name}:[/passed] {artifact}")
        else:
            console.print(f"[bold]{name}:[/bold]")
            console.print_json(data=artifact)

    if "error" in data:
        label: str = (
            "Input error" if report.exit_code == EXIT_INPUT_ERROR else "Check failed"
        )
        console.print(f"[failed]{label}:[/failed] {data['error']}")
    elif report.passed:
        console.print("[passed]All checks passed[/passed]")
    else:
        console.print("[failed]Some checks failed[/failed]")
    if "timing_seconds" in data:
        console.print(f"[dim]Elapsed: {data['timing_seconds']:.3f}s[/dim]")


def render_report(report: RunReport, report_format: str) -> None:
    if report_format == "json":
        typer.echo(report_json(report))
    else:
        render_text(report)
