"""Double P∞ families ↔ good manageable special structures on A ⊕ A#[-1]."""

import logging
from collections import defaultdict
from fractions import Fraction

from precy_bench.ainfty.classify import classify
from precy_bench.ainfty.cyclic import check_cyclic, check_ultracyclic
from precy_bench.ainfty.stasheff import check_stasheff
from precy_bench.correspondence.boundary import (
    boundary_algebra,
    reference_structure,
)
from precy_bench.correspondence.rotation import Entries, rotate_leading_sector
from precy_bench.dpa.axioms import check_dg_algebra
from precy_bench.graded.maps import MultiMap
from precy_bench.graded.signs import evaluation_sign
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, BilinearForm, Classification
from precy_bench.models.algebra import DgAlgebraData
from precy_bench.models.boundary import BoundaryAlgebra
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.pinfty.axioms import check_p_infinity
from precy_bench.pinfty.sign import sign_s
from precy_bench.utils.exceptions import PreconditionError, ValidationError

logger = logging.getLogger(__name__)

EXTRACTION_PREDICATES: tuple[str, ...] = ("good", "manageable", "special")


def interleaved_key(n: int, args: Key, fkey: Key) -> Key:
    """(a_1..a_p), (k_1..k_p) ↦ (a_p, t e_{k_p}*, ..., a_2, t e_{k_2}*, a_1)."""
    p: int = len(args)
    key: list[int] = []
    for j in range(p - 1, 0, -1):
        key.extend((args[j], n + fkey[j]))
    key.append(args[0])
    return tuple(key)


def _factor(S: BoundaryAlgebra, args: Key, outputs: Key) -> Fraction:
    """
    c ↦ x, where c is the e_{k_1}⊗...⊗e_{k_p} coefficient of ⟨a_1..a_p⟩_p
    and x the e_{k_1} coefficient of m_{2p-1}(a_p, t e_{k_p}*, ..., a_1).
    """
    A: GradedSpace = S.base.space
    form: BilinearForm = S.total.form  # type: ignore[assignment]
    out_degrees: list[int] = [A.degree(k) for k in outputs]
    sign: int = sign_s([A.degree(a) for a in args], [-deg for deg in out_degrees])
    evaluation: int = evaluation_sign(out_degrees)
    return Fraction(sign * evaluation) / form.pair(outputs[0], S.dual_index(outputs[0]))


def leading_sector(S: BoundaryAlgebra, P: PInfinityFamily, p: int) -> Entries:
    """m_{2p-1} on A-leading alternating tuples, read off ⟨…⟩_p."""
    n: int = S.dim
    entries: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for args, out in P.bracket(p).entries.items():
        for outputs, coeff in out.items():
            key: Key = interleaved_key(n, args, outputs)
            entries[key][(outputs[0],)] += _factor(S, args, outputs) * coeff
    return {k: dict(v) for k, v in entries.items()}


def precy_from_pinfty(P: PInfinityFamily, force: bool = False) -> BoundaryAlgebra:
    """
    The good manageable special structure on A ⊕ A#[-1] with
    (f_1⊗...⊗f_p)(⟨a_1..a_p⟩_p) = s γ(m_{2p-1}(a_p, tf_p, ..., a_2, tf_2, a_1), tf_1).

    m_1 and m_2 are those of the square-zero extension with ∂ = ⟨…⟩_1.

    Raises:
        PreconditionError: If P fails its axioms, unless `force`
    """
    base: DgAlgebraData = DgAlgebraData(P.space, P.base.product, P.bracket(1))
    report: AxiomReport = AxiomReport(subject="double P∞ algebra")
    report.add(check_dg_algebra(base).get("associativity"))
    report.extend(check_p_infinity(P))
    if not report.passed:
        if not force:
            raise PreconditionError("Input is not a double P∞ algebra", report)
        logger.warning("Building from a failing family: %s", report.first_failure())
    boundary: BoundaryAlgebra = boundary_algebra(base, 0)
    form: BilinearForm = boundary.total.form  # type: ignore[assignment]
    space: GradedSpace = boundary.space
    ops: dict[int, MultiMap] = dict(boundary.total.ops)
    for p in sorted(P.brackets):
        if p < 2:
            continue
        n: int = 2 * p - 1
        leading: Entries = leading_sector(boundary, P, p)
        entries: Entries = {**leading, **rotate_leading_sector(form, n, leading)}
        ops[n] = MultiMap((space,) * n, (space,), 2 - n, entries)
    logger.info("Built P∞ structure with arities %s", sorted(ops))
    return boundary.with_total(boundary.total.with_ops(ops))


def pinfty_report(S: BoundaryAlgebra) -> tuple[AxiomReport, Classification]:
    """Checks a structure must pass before a P∞ family is read off it."""
    report: AxiomReport = AxiomReport(subject="pre-Calabi-Yau structure")
    if S.d != 0:
        report.add(
            CheckResult(name="degree", passed=False, detail=f"needs d = 0, got {S.d}")
        )
    reference: AInfinityData = reference_structure(S)
    classification: Classification = classify(S.total, reference=reference)
    missing: list[str] = classification.require(*EXTRACTION_PREDICATES)
    report.add(
        CheckResult(
            name="predicates",
            passed=not missing,
            detail=f"missing: {', '.join(missing)}" if missing else "",
        )
    )
    if classification.essentially_odd:
        report.extend(check_cyclic(S.total))
        report.extend(check_ultracyclic(S.total))
    report.extend(check_stasheff(S.total))
    return report, classification


def pinfty_from_precy(S: BoundaryAlgebra, force: bool = False) -> PInfinityFamily:
    """
    Read each ⟨…⟩_p off m_{2p-1} on (A ⊗ A#[-1])^{⊗(p-1)} ⊗ A.

    Raises:
        PreconditionError: If S is not good, manageable and special,
            unless `force`
        ValidationError: If S is not built over d = 0
    """
    if S.d != 0:
        raise ValidationError(f"P∞ families live on A ⊕ A#[-1]; got d = {S.d}")
    report, _ = pinfty_report(S)
    if not report.passed:
        if not force:
            raise PreconditionError("Structure does not encode a P∞ family", report)
        logger.warning(
            "Extracting from a failing structure: %s", report.first_failure()
        )
    A: GradedSpace = S.base.space
    n: int = S.dim
    brackets: dict[int, MultiMap] = {1: S.base.differential}
    for arity, op in sorted(S.total.ops.items()):
        if arity < 3 or arity % 2 == 0:
            continue
        p: int = (arity + 1) // 2
        table: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
            lambda: defaultdict(Fraction)
        )
        for key, out in op.entries.items():
            if S.total.pattern(key) != "AD" * (p - 1) + "A":
                continue
            args: Key = tuple(reversed(key[0::2]))
            functionals: tuple[int, ...] = tuple(reversed([k - n for k in key[1::2]]))
            for (k1,), value in out.items():
                if k1 >= n:
                    continue
                outputs: Key = (k1,) + functionals
                table[args][outputs] += value / _factor(S, args, outputs)
        brackets[p] = MultiMap(
            (A,) * p, (A,) * p, 2 - p, {k: dict(v) for k, v in table.items()}
        )
    graded: DgAlgebraData = DgAlgebraData.build(A, S.base.product)
    logger.info("Extracted P∞ family with arities %s", sorted(brackets))
    return PInfinityFamily(graded, brackets)
