"""Report of one workbench command."""

from dataclasses import dataclass, field
from typing import Any, Optional

from precy_bench.models.report import AxiomReport

EXIT_PASSED: int = 0
EXIT_FAILED: int = 1
EXIT_INPUT_ERROR: int = 2


@dataclass
class RunReport:
    """
    Everything a command produced: verdicts, predicates, artifacts.

    Check results are ordered by (name, witness) inside each section, and
    sections keep the order in which the command ran them.
    """

    command: list[str]
    """Command echo, e.g. ["check", "dpa", "br.json"]"""

    sections: list[AxiomReport] = field(default_factory=list)
    """Check reports in execution order"""

    predicates: list[str] = field(default_factory=list)
    """Structural predicates that hold, sorted"""

    data: dict[str, Any] = field(default_factory=dict)
    """Computed values such as cohomology dimensions"""

    artifacts: dict[str, Any] = field(default_factory=dict)
    """Constructed objects in file form, or the paths they were written to"""

    error: Optional[str] = None
    """Input or precondition error message"""

    exit_code: int = EXIT_PASSED
    """0 all pass, 1 failed check or precondition, 2 input error"""

    timing: Optional[float] = None
    """Wall-clock seconds, only when requested"""

    @property
    def passed(self) -> bool:
        return self.error is None and all(section.passed for section in self.sections)

    def add(self, section: AxiomReport) -> None:
        self.sections.append(section)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "command": list(self.command),
            "exit_code": self.exit_code,
            "passed": self.passed,
            "sections": [section.to_dict() for section in self.sections],
            "predicates": sorted(self.predicates),
        }
        if self.data:
            data["data"] = self.data
        if self.artifacts:
            data["artifacts"] = self.artifacts
        if self.error is not None:
            data["error"] = self.error
        if self.timing is not None:
            data["timing_seconds"] = round(self.timing, 6)
        return data

    def __repr__(self) -> str:
        return (
            f"RunReport(command={' '.join(self.command)!r}, "
            f"sections={len(self.sections)}, exit_code={self.exit_code})"
        )
