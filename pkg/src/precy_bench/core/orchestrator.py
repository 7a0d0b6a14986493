"""Workbench: runs one command over workbench files and builds its report."""

import json
import logging
import time
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, Optional

from precy_bench.ainfty.classify import classify
from precy_bench.ainfty.cyclic import check_cyclic
from precy_bench.ainfty.stasheff import check_stasheff
from precy_bench.core.config import Config
from precy_bench.correspondence.boundary import (
    boundary_from_structure,
    reference_structure,
)
from precy_bench.correspondence.bracket import (
    bracket_from_precy,
    extraction_report,
    precy_from_bracket,
)
from precy_bench.functoriality.cohomology import check_quasi_iso, cohomology
from precy_bench.functoriality.compose import compose_boundary
from precy_bench.functoriality.mixed import boundary_morphism, check_mixed_boundary
from precy_bench.functoriality.morphism import underlying_morphism
from precy_bench.graded.maps import MultiMap
from precy_bench.models.ainfty import AInfinityData, MorphismData
from precy_bench.models.algebra import DoubleBracket, DpaMorphism, PoissonAlgebra
from precy_bench.models.boundary import (
    BoundaryAlgebra,
    CompositionWitness,
    MixedBoundary,
)
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.models.run import (
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_PASSED,
    RunReport,
)
from precy_bench.pinfty.correspondence import (
    pinfty_from_precy,
    pinfty_report,
    precy_from_pinfty,
)
from precy_bench.storage.base import BaseStorage
from precy_bench.storage.codec import WorkbenchDocument, document_for
from precy_bench.utils.exceptions import (
    DifferentialError,
    PreconditionError,
    ValidationError,
    WorkbenchError,
)
from precy_bench.verifiers.base import Verification
from precy_bench.verifiers.factory import VerifierFactory

logger = logging.getLogger(__name__)

Handler = Callable[["RunContext"], None]


class RunContext:
    """Inputs and accumulating report of one command run."""

    def __init__(
        self,
        command: tuple[str, ...],
        report: RunReport,
        documents: list[WorkbenchDocument],
        max_n: Optional[int],
        mode: str,
        force: bool,
        output: Optional[Path],
    ) -> None:
        self.command: tuple[str, ...] = command
        self.report: RunReport = report
        self.documents: list[WorkbenchDocument] = documents
        self.max_n: Optional[int] = max_n
        self.mode: str = mode
        self.force: bool = force
        self.output: Optional[Path] = output

    @property
    def document(self) -> WorkbenchDocument:
        return self.documents[0]


class Workbench:
    """
    Runs workbench commands over parsed files.

    This is the high-level API that CLI commands use. Results come back as
    a RunReport whose exit code is 0 when every check passes, 1 when a
    check or a precondition fails and 2 on input errors.
    """

    def __init__(self, config: Config, storage: BaseStorage) -> None:
        """
        Initialize the workbench.

        Args:
            config: Application configuration
            storage: Storage backend used to read and write files
        """
        self.config: Config = config
        self.storage: BaseStorage = storage
        self._handlers: dict[tuple[str, ...], Handler] = {
            ("check", "dpa"): self._check,
            ("check", "pinf"): self._check,
            ("check", "ainfty"): self._check,
            ("build", "precy"): self._build_precy,
            ("build", "pinf-precy"): self._build_pinf_precy,
            ("build", "morphism"): self._build_morphism,
            ("extract", "bracket"): self._extract_bracket,
            ("extract", "pinf"): self._extract_pinf,
            ("roundtrip",): self._roundtrip,
            ("compose",): self._compose,
            ("cohomology",): self._cohomology,
            ("quasiiso",): self._quasiiso,
        }

    def run(
        self,
        command: Sequence[str],
        files: Sequence[Path],
        max_n: Optional[int] = None,
        mode: str = "generators",
        force: bool = False,
        output: Optional[Path] = None,
        timing: bool = False,
    ) -> RunReport:
        """
        Run a command and report its verdicts.

        Args:
            command: Command words, e.g. ("check", "ainfty")
            files: Input files
            max_n: Cap on identity arity for checks
            mode: Permutation mode, generators or full
            force: Build from inputs that fail their preconditions
            output: Where to write a constructed object
            timing: Record wall-clock time in the report

        Returns:
            RunReport with exit code
        """
        key: tuple[str, ...] = tuple(command)
        report: RunReport = RunReport(
            command=self._echo(key, files, max_n, mode, force)
        )
        started: float = time.perf_counter()
        try:
            handler: Optional[Handler] = self._handlers.get(key)
            if handler is None:
                raise ValidationError(f"Unknown command: {' '.join(key)}")
            expected: int = 2 if key == ("compose",) else 1
            if len(files) != expected:
                raise ValidationError(
                    f"{' '.join(key)} takes {expected} file(s), got {len(files)}"
                )
            documents: list[WorkbenchDocument] = [self.storage.load(f) for f in files]
            handler(RunContext(key, report, documents, max_n, mode, force, output))
            report.exit_code = EXIT_PASSED if report.passed else EXIT_FAILED
        except PreconditionError as e:
            if isinstance(e.report, AxiomReport):
                report.add(e.report)
            report.error = str(e)
            report.exit_code = EXIT_FAILED
        except DifferentialError as e:
            report.error = str(e)
            report.exit_code = EXIT_FAILED
        except WorkbenchError as e:
            report.error = str(e)
            report.exit_code = EXIT_INPUT_ERROR
        if timing:
            report.timing = time.perf_counter() - started
        logger.info("%r", report)
        return report

    @staticmethod
    def _echo(
        key: tuple[str, ...],
        files: Sequence[Path],
        max_n: Optional[int],
        mode: str,
        force: bool,
    ) -> list[str]:
        echo: list[str] = [*key, *(str(f) for f in files)]
        if max_n is not None:
            echo += ["--max-n", str(max_n)]
        if mode != "generators":
            echo += ["--ultra", mode]
        if force:
            echo.append("--force")
        return echo

    # ========== Helpers ==========

    def _emit(self, ctx: RunContext, name: str, document: WorkbenchDocument) -> None:
        """Write the constructed object, or embed its canonical form."""
        if ctx.output is not None:
            self.storage.save(document, ctx.output)
            ctx.report.artifacts[name] = str(ctx.output)
        else:
            ctx.report.artifacts[name] = json.loads(self.storage.dumps(document))

    @staticmethod
    def _poisson(document: WorkbenchDocument) -> PoissonAlgebra:
        if not isinstance(document.value, PoissonAlgebra):
            raise ValidationError(
                f"Expected an algebra or bracket file, got {document.kind!r}"
            )
        return document.value

    @staticmethod
    def _structure(document: WorkbenchDocument) -> AInfinityData:
        if not isinstance(document.value, AInfinityData):
            raise ValidationError(f"Expected an ainfty file, got {document.kind!r}")
        return document.value

    @staticmethod
    def _morphism(document: WorkbenchDocument) -> DpaMorphism:
        if not isinstance(document.value, DpaMorphism):
            raise ValidationError(f"Expected a morphism file, got {document.kind!r}")
        return document.value

    @staticmethod
    def _family(document: WorkbenchDocument) -> PInfinityFamily:
        if isinstance(document.value, PInfinityFamily):
            return document.value
        if isinstance(document.value, PoissonAlgebra):
            return PInfinityFamily.from_double_poisson(
                document.value.algebra, document.value.bracket
            )
        raise ValidationError(
            f"Expected a pinfty or bracket file, got {document.kind!r}"
        )

    def _verify_structure(self, ctx: RunContext, S: BoundaryAlgebra) -> None:
        ctx.report.add(check_stasheff(S.total, ctx.max_n))
        ctx.report.add(check_cyclic(S.total))
        reference: AInfinityData = reference_structure(S)
        ctx.report.predicates = classify(S.total, reference=reference).predicates()

    # ========== Commands ==========

    def _check(self, ctx: RunContext) -> None:
        target: str = ctx.command[1]
        verification: Verification = VerifierFactory.create(
            target, self.config, max_n=ctx.max_n, mode=ctx.mode
        ).verify(ctx.document)
        for section in verification.reports:
            ctx.report.add(section)
        ctx.report.predicates = sorted(verification.predicates)

    def _build_precy(self, ctx: RunContext) -> None:
        value: PoissonAlgebra = self._poisson(ctx.document)
        S: BoundaryAlgebra = precy_from_bracket(value.algebra, value.bracket, ctx.force)
        self._verify_structure(ctx, S)
        self._emit(ctx, "structure", document_for(S))

    def _build_pinf_precy(self, ctx: RunContext) -> None:
        S: BoundaryAlgebra = precy_from_pinfty(self._family(ctx.document), ctx.force)
        report, classification = pinfty_report(S)
        ctx.report.add(report)
        ctx.report.predicates = classification.predicates()
        self._emit(ctx, "structure", document_for(S))

    def _build_morphism(self, ctx: RunContext) -> None:
        M: MixedBoundary = boundary_morphism(self._morphism(ctx.document), ctx.force)
        ctx.report.add(check_mixed_boundary(M))
        self._emit(ctx, "structure", document_for(M))

    def _extract_bracket(self, ctx: RunContext) -> None:
        S: BoundaryAlgebra = boundary_from_structure(self._structure(ctx.document))
        bracket: DoubleBracket = bracket_from_precy(S, ctx.force)
        report, classification = extraction_report(S)
        ctx.report.add(report)
        ctx.report.predicates = classification.predicates()
        self._emit(
            ctx,
            "bracket",
            WorkbenchDocument("bracket", PoissonAlgebra(S.base, bracket)),
        )

    def _extract_pinf(self, ctx: RunContext) -> None:
        S: BoundaryAlgebra = boundary_from_structure(self._structure(ctx.document))
        family: PInfinityFamily = pinfty_from_precy(S, ctx.force)
        report, classification = pinfty_report(S)
        ctx.report.add(report)
        ctx.report.predicates = classification.predicates()
        self._emit(ctx, "pinfty", document_for(family))

    def _roundtrip(self, ctx: RunContext) -> None:
        document: WorkbenchDocument = ctx.document
        section: AxiomReport = AxiomReport(subject=f"{document.kind} round trip")
        rebuilt: WorkbenchDocument
        if isinstance(document.value, PoissonAlgebra):
            value: PoissonAlgebra = document.value
            S: BoundaryAlgebra = precy_from_bracket(
                value.algebra, value.bracket, ctx.force
            )
            bracket: DoubleBracket = bracket_from_precy(S, ctx.force)
            section.add(
                CheckResult.from_defect(
                    "bracket_entries", bracket.table - value.bracket.table
                )
            )
            again: BoundaryAlgebra = precy_from_bracket(
                value.algebra, bracket, ctx.force
            )
            _compare_ops(section, S.total.ops, again.total.ops)
            rebuilt = WorkbenchDocument(
                document.kind, PoissonAlgebra(value.algebra, bracket)
            )
        elif isinstance(document.value, PInfinityFamily):
            P: PInfinityFamily = document.value
            S = precy_from_pinfty(P, ctx.force)
            family: PInfinityFamily = pinfty_from_precy(S, ctx.force)
            _compare_ops(section, P.brackets, family.brackets, label="bracket")
            again = precy_from_pinfty(family, ctx.force)
            _compare_ops(section, S.total.ops, again.total.ops)
            rebuilt = WorkbenchDocument("pinfty", family)
        elif isinstance(document.value, AInfinityData):
            S = boundary_from_structure(document.value)
            if S.total.max_arity > 3:
                again = precy_from_pinfty(pinfty_from_precy(S, ctx.force), ctx.force)
            else:
                extracted: DoubleBracket = bracket_from_precy(S, ctx.force)
                again = precy_from_bracket(S.base, extracted, ctx.force)
            _compare_ops(section, S.total.ops, again.total.ops)
            rebuilt = WorkbenchDocument("ainfty", again.total)
        else:
            raise ValidationError(f"No round trip for {document.kind!r} files")
        original: str = self.storage.dumps(document)
        text: str = self.storage.dumps(rebuilt)
        section.add(
            CheckResult(
                name="canonical_text",
                passed=original == text,
                detail="" if original == text else "re-serialization differs",
            )
        )
        ctx.report.add(section)
        self._emit(ctx, "rebuilt", rebuilt)

    def _compose(self, ctx: RunContext) -> None:
        phi: DpaMorphism = self._morphism(ctx.documents[0])
        psi: DpaMorphism = self._morphism(ctx.documents[1])
        witness: CompositionWitness = compose_boundary(phi, psi, ctx.force)
        ctx.report.add(check_mixed_boundary(witness.composite))
        ctx.report.add(witness.report)
        self._emit(ctx, "structure", document_for(witness.composite))

    def _cohomology(self, ctx: RunContext) -> None:
        dims: dict[int, int]
        value: Any = ctx.document.value
        if isinstance(value, PoissonAlgebra):
            dims = cohomology(value.space, value.algebra.differential)
        elif isinstance(value, AInfinityData):
            dims = cohomology(value.space, value.op(1))
        elif isinstance(value, PInfinityFamily):
            dims = cohomology(value.space, value.bracket(1))
        else:
            raise ValidationError(f"No complex in a {ctx.document.kind!r} file")
        ctx.report.data["cohomology"] = {str(k): v for k, v in sorted(dims.items())}

    def _quasiiso(self, ctx: RunContext) -> None:
        phi: DpaMorphism = self._morphism(ctx.document)
        section: AxiomReport = AxiomReport(subject="quasi-isomorphisms")
        _quasi_iso_result(section, "quasi_iso(φ)", underlying_morphism(phi))
        M: MixedBoundary = boundary_morphism(phi, ctx.force)
        _quasi_iso_result(section, "quasi_iso(Φ_A)", M.leg_a)
        _quasi_iso_result(section, "quasi_iso(Φ_B)", M.leg_b)
        ctx.report.add(section)


def _compare_ops(
    section: AxiomReport,
    before: dict[int, MultiMap],
    after: dict[int, MultiMap],
    label: str = "m",
) -> None:
    """One check per arity: the rebuilt map minus the original."""
    for n in sorted(set(before) | set(after)):
        first: Optional[MultiMap] = before.get(n)
        second: Optional[MultiMap] = after.get(n)
        reference: MultiMap = first if first is not None else second  # type: ignore
        zero: MultiMap = MultiMap.zero(
            reference.domain, reference.codomain, reference.degree
        )
        section.add(
            CheckResult.from_defect(
                f"{label}{n}_entries", (second or zero) - (first or zero)
            )
        )


def _quasi_iso_result(section: AxiomReport, name: str, F: MorphismData) -> None:
    passed: bool = check_quasi_iso(F)
    section.add(
        CheckResult(
            name=name,
            passed=passed,
            detail="" if passed else "cohomology maps are not all isomorphisms",
        )
    )
