"""Rich consoles for reports and diagnostics."""

from rich.console import Console
from rich.theme import Theme

# Verdict styles used by the report tables
report_theme: Theme = Theme(
    {
        "check": "cyan",
        "passed": "bold green",
        "failed": "bold red",
        "witness": "magenta",
        "predicate": "blue",
        "note": "dim",
    }
)

# Reports go to stdout, diagnostics to stderr
console: Console = Console(theme=report_theme)
err_console: Console = Console(theme=report_theme, stderr=True)
