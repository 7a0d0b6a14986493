"""Logging setup: one Rich handler on stderr."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME: str = "precy-bench"


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """
    Route the package logger through a RichHandler writing to stderr.

    Calling it again only updates the level.
    """
    logger: logging.Logger = logging.getLogger("precy_bench")
    logger.setLevel(level.upper())
    if not any(h.get_name() == _HANDLER_NAME for h in logger.handlers):
        handler: RichHandler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.set_name(_HANDLER_NAME)
        handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
        logger.addHandler(handler)
    return logger
