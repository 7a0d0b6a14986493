"""Sector-by-sector reduction of SI(4) and SI(5) against the form."""

import logging

from precy_bench.ainfty.classify import classify
from precy_bench.ainfty.cyclic import sector_defects
from precy_bench.correspondence.boundary import reference_structure
from precy_bench.graded.maps import MultiMap
from precy_bench.models.ainfty import AInfinityData, Classification
from precy_bench.models.boundary import BoundaryAlgebra
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import DimensionError, PreconditionError

logger = logging.getLogger(__name__)

DISTINGUISHED_SECTORS: dict[int, str] = {4: "AADAD", 5: "ADADAD"}


def sector_reduction_check(S: BoundaryAlgebra, n: int) -> AxiomReport:
    """
    Confirm that SI(n)_γ vanishes on the distinguished sector exactly when
    it vanishes on every sector.

    Raises:
        DimensionError: If n is not 4 or 5
        PreconditionError: If S is not good, small and manageable
    """
    if n not in DISTINGUISHED_SECTORS:
        raise DimensionError(f"Sector reduction is defined for n = 4, 5; got {n}")
    reference: AInfinityData = reference_structure(S)
    classification: Classification = classify(S.total, reference=reference)
    missing: list[str] = classification.require("good", "small", "manageable")
    if missing:
        raise PreconditionError(
            f"Sector reduction needs {', '.join(missing)}", classification
        )
    pattern: str = DISTINGUISHED_SECTORS[n]
    defects: dict[str, MultiMap] = sector_defects(S.total, n)
    logger.debug("SI(%d)_γ nonzero on sectors %s", n, sorted(defects))
    distinguished: bool = pattern not in defects
    everywhere: bool = not defects
    report: AxiomReport = AxiomReport(subject=f"SI({n})_γ sector reduction")
    detail: str = ""
    if distinguished != everywhere:
        detail = f"{pattern} vanishes but {', '.join(sorted(defects))} do not"
    report.add(
        CheckResult(
            name=f"sector_equivalence(n={n})",
            passed=distinguished == everywhere,
            checked=len(defects),
            detail=detail,
        )
    )
    report.notes.append(
        f"nonzero sectors: {', '.join(sorted(defects))}"
        if defects
        else "all sectors vanish"
    )
    return report
