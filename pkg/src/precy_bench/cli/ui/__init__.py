from .console import console, err_console
from .render import render_report, report_json

__all__ = [
    "console",
    "err_console",
    "render_report",
    "report_json",
]
