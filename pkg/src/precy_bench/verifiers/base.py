"""Base verifier interface."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

from precy_bench.core.config import Config
from precy_bench.models.report import AxiomReport
from precy_bench.storage.codec import WorkbenchDocument
from precy_bench.utils.exceptions import ValidationError
from precy_bench.utils.validators import validate_ultra_mode


@dataclass
class Verification:
    """Reports and predicates produced by one verifier run."""

    reports: list[AxiomReport] = field(default_factory=list)
    """Check reports in evaluation order"""

    predicates: list[str] = field(default_factory=list)
    """Predicates that hold"""

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)


class BaseVerifier(ABC):
    """
    Abstract base class for the `check` targets.

    Each verifier accepts a fixed set of document kinds and turns a
    document into check reports.
    """

    kinds: tuple[str, ...] = ()

    def __init__(
        self,
        config: Config,
        max_n: Optional[int] = None,
        mode: str = "generators",
    ) -> None:
        """
        Initialize the verifier.

        Args:
            config: Application configuration
            max_n: Cap on the arity of the identities checked
            mode: Permutation mode for ultracyclicity and antisymmetry
        """
        if max_n is not None and max_n < 1:
            raise ValidationError(f"--max-n must be at least 1, got {max_n}")
        self.config: Config = config
        self.max_n: Optional[int] = max_n
        self.mode: str = validate_ultra_mode(mode)

    def require(self, document: WorkbenchDocument) -> None:
        """
        Raises:
            ValidationError: If the document kind is not accepted
        """
        if document.kind not in self.kinds:
            raise ValidationError(
                f"{type(self).__name__} expects {' or '.join(self.kinds)} files, "
                f"got {document.kind!r}"
            )

    @abstractmethod
    def verify(self, document: WorkbenchDocument) -> Verification:
        """
        Run every check this target covers.

        Args:
            document: Parsed workbench file

        Returns:
            Verification with reports and predicates

        Raises:
            ValidationError: If the document kind is not accepted
        """
        pass
