"""Custom exceptions."""

from typing import Any, Optional


class WorkbenchError(Exception):
    """Base exception for all precy-bench errors."""

    pass


class DimensionError(WorkbenchError):
    """Length, arity or dimension mismatch."""

    pass


class HomogeneityError(WorkbenchError):
    """Mixed degrees where a sign-sensitive operation needs a single one."""

    pass


class SpaceMismatchError(WorkbenchError):
    """Objects defined over different graded spaces."""

    pass


class DifferentialError(WorkbenchError):
    """A differential does not square to zero, or a map is not a chain map."""

    pass


class MissingFormError(WorkbenchError):
    """A cyclic check was requested on a structure without a bilinear form."""

    pass


class MissingReferenceError(WorkbenchError):
    """Manageability was requested without a reference square-zero extension."""

    pass


class PreconditionError(WorkbenchError):
    """An operation was called on input that does not meet its requirements."""

    def __init__(self, message: str, report: Optional[Any] = None) -> None:
        super().__init__(message)
        self.report = report


class ValidationError(WorkbenchError):
    """Input validation errors (schema, unknown symbols, coefficients)."""

    pass


class ParseError(ValidationError):
    """Malformed workbench file text."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        path: Optional[str] = None,
    ) -> None:
        location: str = ""
        if path:
            location += f"{path}:"
        if line is not None:
            location += f"{line}:{column}:"
        super().__init__(f"{location} {message}" if location else message)
        self.line = line
        self.column = column
        self.path = path


class StorageError(WorkbenchError):
    """Storage-related errors (IO failures, content-hash drift)."""

    pass
