"""Utility functions and exceptions."""

from precy_bench.utils.exceptions import (
    DifferentialError,
    DimensionError,
    HomogeneityError,
    MissingFormError,
    MissingReferenceError,
    ParseError,
    PreconditionError,
    SpaceMismatchError,
    StorageError,
    ValidationError,
    WorkbenchError,
)
from precy_bench.utils.parsers import format_rational, parse_rational

__all__ = [
    "DifferentialError",
    "DimensionError",
    "HomogeneityError",
    "MissingFormError",
    "MissingReferenceError",
    "ParseError",
    "PreconditionError",
    "SpaceMismatchError",
    "StorageError",
    "ValidationError",
    "WorkbenchError",
    "format_rational",
    "parse_rational",
]
