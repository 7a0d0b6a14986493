"""Verdict and witness models shared by every checker."""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Optional

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key, Tensor
from precy_bench.utils.parsers import format_rational


@dataclass(frozen=True)
class Witness:
    """
    A basis tuple on which an identity fails.

    Re-evaluating the defect at `key` reproduces `defect`.
    """

    spaces: tuple[GradedSpace, ...]
    """Spaces of the input slots"""

    key: Key
    """Basis indices of the failing input"""

    defect: Tensor
    """Nonzero defect value"""

    @property
    def args(self) -> tuple[str, ...]:
        return tuple(space.symbol(i) for space, i in zip(self.spaces, self.key))

    def to_dict(self) -> dict[str, Any]:
        return {
            "args": list(self.args),
            "defect": [
                {
                    "factors": [s.symbol(i) for s, i in zip(self.defect.spaces, k)],
                    "coeff": format_rational(v),
                }
                for k, v in self.defect.items()
            ],
        }

    def __repr__(self) -> str:
        return f"Witness(args={self.args}, defect={self.defect!r})"


@dataclass
class CheckResult:
    """Outcome of a single named identity check."""

    name: str
    """Check name, e.g. "leibniz" or "SI(3)" """

    passed: bool
    """Whether the identity holds on every evaluated tuple"""

    witness: Optional[Witness] = None
    """First failing tuple in lexicographic order"""

    checked: int = 0
    """Number of stored nonzero contributions examined"""

    detail: str = ""
    """Free-form note"""

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None and not self.detail:
            raise ValueError(f"Failing check {self.name!r} needs a witness or detail")

    @classmethod
    def from_defect(
        cls, name: str, defect: MultiMap, detail: str = ""
    ) -> "CheckResult":
        """Pass iff the defect map is zero; otherwise witness its first entry."""
        first: Optional[tuple[Key, dict[Key, Fraction]]] = defect.first_entry()
        if first is None:
            return cls(
                name=name, passed=True, checked=len(defect.entries), detail=detail
            )
        key, out = first
        witness: Witness = Witness(
            defect.domain, key, Tensor(defect.codomain, dict(out))
        )
        return cls(
            name=name,
            passed=False,
            witness=witness,
            checked=len(defect.entries),
            detail=detail,
        )

    def sort_key(self) -> tuple[str, tuple[str, ...]]:
        return (self.name, self.witness.args if self.witness else ())

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class AxiomReport:
    """
    Collection of check results for one subject.

    Ordering of results is lexicographic in (name, witness args).
    """

    subject: str
    """What was checked"""

    results: list[CheckResult] = field(default_factory=list)
    """Individual verdicts"""

    notes: list[str] = field(default_factory=list)
    """Conventions and caveats recorded during the run"""

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        """Merge another report; `prefix` namespaces the merged check names."""
        self.results.extend(
            replace(r, name=f"{prefix}{r.name}") if prefix else r for r in other.results
        )
        self.notes.extend(note for note in other.notes if note not in self.notes)

    def get(self, name: str) -> CheckResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.sorted_results() if not r.passed]

    def first_failure(self) -> Optional[CheckResult]:
        """First failure in evaluation order."""
        for result in self.results:
            if not result.passed:
                return result
        return None

    def sorted_results(self) -> list[CheckResult]:
        return sorted(self.results, key=CheckResult.sort_key)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.sorted_results()],
            "notes": list(self.notes),
        }

    def __repr__(self) -> str:
        failed: int = len([r for r in self.results if not r.passed])
        return (
            f"AxiomReport(subject='{self.subject}', checks={len(self.results)}, "
            f"failed={failed})"
        )
