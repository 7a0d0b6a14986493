"""The bijection between double Poisson brackets and nice boundary structures."""

import logging
from collections import defaultdict
from fractions import Fraction

from precy_bench.ainfty.classify import classify
from precy_bench.ainfty.cyclic import check_cyclic
from precy_bench.ainfty.stasheff import check_stasheff
from precy_bench.correspondence.boundary import (
    boundary_algebra,
    reference_structure,
)
from precy_bench.correspondence.rotation import Entries, rotate_leading_sector
from precy_bench.dpa.axioms import check_dg_algebra, check_double_poisson
from precy_bench.graded.maps import MultiMap
from precy_bench.graded.signs import evaluation_sign, parity
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, BilinearForm, Classification
from precy_bench.models.algebra import DgAlgebraData, DoubleBracket
from precy_bench.models.boundary import BoundaryAlgebra
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import PreconditionError, SpaceMismatchError

logger = logging.getLogger(__name__)

EXTRACTION_PREDICATES: tuple[str, ...] = ("nice", "fully_manageable", "good")


def bracket_sign(a: int, b: int, f: int, g: int) -> int:
    """s = (-1)^{|b|(|a| + |g| + 1)}; |f| does not enter."""
    return parity(b * (a + g + 1))


def _m3_factor(S: BoundaryAlgebra, p: int, q: int, i: int, j: int) -> Fraction:
    """
    c ↦ x, where c is the e_i ⊗ e_j coefficient of ⟨e_p, e_q⟩ and x the
    e_i coefficient of m_3(e_q, t e_j*, e_p). The factor is its own inverse
    up to the pairing value.
    """
    A: GradedSpace = S.base.space
    form: BilinearForm = S.total.form  # type: ignore[assignment]
    sign: int = bracket_sign(A.degree(p), A.degree(q), -A.degree(i), -A.degree(j))
    evaluation: int = evaluation_sign([A.degree(i), A.degree(j)])
    return Fraction(sign * evaluation) / form.pair(i, S.dual_index(i))


def precy_from_bracket(
    A: DgAlgebraData, br: DoubleBracket, force: bool = False
) -> BoundaryAlgebra:
    """
    The nice fully manageable pre-Calabi-Yau structure on ∂_{d-1}A with
    (f ⊗ g)(⟨a, b⟩) = (-1)^{|b|(|a|+|g|+1)} γ(m_3(b, tg, a), tf).

    m_3 on A ⊗ D ⊗ A is read off the bracket; m_3 on D ⊗ A ⊗ D follows
    from cyclicity.

    Raises:
        PreconditionError: If A is not a dg algebra or br is not double
            Poisson, unless `force`
    """
    if br.space != A.space:
        raise SpaceMismatchError("Bracket is not defined over the algebra's space")
    report: AxiomReport = AxiomReport(subject="double Poisson dg algebra")
    report.extend(check_dg_algebra(A))
    report.extend(check_double_poisson(A, br))
    if not report.passed:
        if not force:
            raise PreconditionError("Input is not a double Poisson dg algebra", report)
        logger.warning("Building from a failing bracket: %s", report.first_failure())

    boundary: BoundaryAlgebra = boundary_algebra(A, br.d)
    n: int = A.space.dim
    leading: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for (p, q), out in br.table.entries.items():
        for (i, j), coeff in out.items():
            factor: Fraction = _m3_factor(boundary, p, q, i, j)
            leading[(q, n + j, p)][(i,)] += factor * coeff
    ada: Entries = {k: dict(v) for k, v in leading.items()}
    form: BilinearForm = boundary.total.form  # type: ignore[assignment]
    entries: Entries = {**ada, **rotate_leading_sector(form, 3, ada)}
    total: GradedSpace = boundary.space
    m3: MultiMap = MultiMap((total,) * 3, (total,), -1, entries)
    structure: AInfinityData = boundary.total.with_ops(
        {**boundary.total.ops, 3: m3}
    )
    logger.info("Built m_3 with %d nonzero entries", len(m3.entries))
    return boundary.with_total(structure)


def extraction_report(S: BoundaryAlgebra) -> tuple[AxiomReport, Classification]:
    """Checks a structure must pass before a bracket is read off it."""
    reference: AInfinityData = reference_structure(S)
    classification: Classification = classify(S.total, reference=reference)
    report: AxiomReport = AxiomReport(subject="boundary structure")
    missing: list[str] = classification.require(*EXTRACTION_PREDICATES)
    report.add(
        CheckResult(
            name="predicates",
            passed=not missing,
            detail=f"missing: {', '.join(missing)}" if missing else "",
        )
    )
    report.extend(check_cyclic(S.total))
    report.extend(check_stasheff(S.total))
    return report, classification


def bracket_from_precy(S: BoundaryAlgebra, force: bool = False) -> DoubleBracket:
    """
    Read ⟨e_p, e_q⟩ off m_3(e_q, t e_j*, e_p) over the dual basis.

    Raises:
        PreconditionError: If the structure is not nice, fully manageable,
            good, cyclic and Stasheff, unless `force`
    """
    report, _ = extraction_report(S)
    if not report.passed:
        if not force:
            raise PreconditionError(
                "Structure does not encode a double bracket", report
            )
        logger.warning(
            "Extracting from a failing structure: %s", report.first_failure()
        )
    A: GradedSpace = S.base.space
    n: int = S.dim
    entries: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for key, out in S.total.op(3).entries.items():
        q, dual, p = key
        if q >= n or p >= n or dual < n:
            continue
        j: int = dual - n
        for (i,), value in out.items():
            if i >= n:
                continue
            factor: Fraction = _m3_factor(S, p, q, i, j)
            entries[(p, q)][(i, j)] += value / factor
    table: MultiMap = MultiMap(
        (A, A), (A, A), -S.d, {k: dict(v) for k, v in entries.items()}
    )
    logger.info("Extracted bracket with %d nonzero entries", len(table.entries))
    return DoubleBracket(S.d, table)
