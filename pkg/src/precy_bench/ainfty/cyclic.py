"""Bilinear forms, cyclicity and ultracyclicity."""

import logging
from fractions import Fraction
from typing import Optional

from precy_bench.ainfty.stasheff import stasheff_defect
from precy_bench.graded.maps import MultiMap, compose
from precy_bench.graded.signs import SignedPermutation, koszul_sign, parity
from precy_bench.graded.space import GradedSpace, boundary_space, tuple_degree
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, BilinearForm
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import (
    MissingFormError,
    PreconditionError,
    ValidationError,
)
from precy_bench.utils.validators import validate_ultra_mode

logger = logging.getLogger(__name__)


def natural_form(A: GradedSpace, shift: int) -> BilinearForm:
    """
    Evaluation pairing on A ⊕ A#[shift]:
    γ(t e_i*, e_j) = δ_ij, γ(e_j, t e_i*) = (-1)^{|e_j||t e_i*|} δ_ij,
    zero on A ⊗ A and on the dual part squared.
    """
    total: GradedSpace = boundary_space(A, shift)
    n: int = A.dim
    values: dict[tuple[int, int], Fraction] = {}
    for i in range(n):
        dual_degree: int = total.degree(n + i)
        values[(n + i, i)] = Fraction(1)
        values[(i, n + i)] = Fraction(parity(A.degree(i) * dual_degree))
    return BilinearForm.from_pairs(total, shift, values)


def _require_form(S: AInfinityData) -> BilinearForm:
    if S.form is None:
        raise MissingFormError("Structure has no bilinear form")
    return S.form


def pairing_functional(S: AInfinityData, n: int) -> dict[Key, Fraction]:
    """(x_1, ..., x_n, y) ↦ γ(m_n(x_1, ..., x_n), y), sparse."""
    form: BilinearForm = _require_form(S)
    result: dict[Key, Fraction] = {}
    for key, out in S.op(n).entries.items():
        for (k,), coeff in out.items():
            for y, value in form.partners(k):
                full: Key = key + (y,)
                result[full] = result.get(full, Fraction(0)) + coeff * value
    return {k: v for k, v in result.items() if v}


def cyclic_defect(S: AInfinityData, n: int) -> MultiMap:
    """
    (a_1, ..., a_n, a_0) ↦ γ(m_n(a_1..a_n), a_0)
    - (-1)^{n + |a_0|Σ|a_i|} γ(m_n(a_0..a_{n-1}), a_n).
    """
    form: BilinearForm = _require_form(S)
    space: GradedSpace = S.space
    values: dict[Key, Fraction] = pairing_functional(S, n)
    candidates: set[Key] = set(values)
    candidates.update(key[1:] + key[:1] for key in values)
    entries: dict[Key, dict[Key, Fraction]] = {}
    for key in candidates:
        rotated: Key = key[-1:] + key[:-1]
        last: int = space.degree(key[-1])
        sign: int = parity(n + last * tuple_degree((space,) * n, key[:-1]))
        defect: Fraction = values.get(key, Fraction(0)) - sign * values.get(
            rotated, Fraction(0)
        )
        if defect:
            entries[key] = {(): defect}
    return MultiMap((space,) * (n + 1), (), 2 - n + form.degree, entries)


def check_cyclic(S: AInfinityData) -> AxiomReport:
    """Rotation invariance of γ(m_n(...), -) for every stored n."""
    form: BilinearForm = _require_form(S)
    report: AxiomReport = AxiomReport(subject="cyclic structure")
    report.add(
        CheckResult.from_defect("form_supersymmetry", form.supersymmetry_defect())
    )
    for n in sorted(S.ops):
        report.add(CheckResult.from_defect(f"cyclic(n={n})", cyclic_defect(S, n)))
    if not form.is_nondegenerate():
        report.notes.append("form is degenerate")
    return report


def is_essentially_odd(S: AInfinityData) -> bool:
    return all(n == 2 or n % 2 for n in S.ops)


def check_ultracyclic(S: AInfinityData, mode: str = "generators") -> AxiomReport:
    """
    Invariance of γ(m_{2p-1}(a_1, b_1, ..., a_p), b_p) under permuting the
    pairs (a_i, b_i), with the Koszul sign of the interleaved permutation.

    Raises:
        PreconditionError: If the structure is not essentially odd
    """
    mode = validate_ultra_mode(mode)
    form: BilinearForm = _require_form(S)
    if not is_essentially_odd(S):
        raise PreconditionError("Ultracyclicity needs an essentially odd structure")
    space: GradedSpace = S.space
    report: AxiomReport = AxiomReport(subject="ultracyclic structure")
    report.notes.append(f"permutation mode: {mode}")
    for n in sorted(S.ops):
        if n % 2 == 0 or n < 3:
            continue
        p: int = (n + 1) // 2
        perms: list[SignedPermutation] = (
            SignedPermutation.adjacent_generators(p)
            if mode == "generators"
            else [
                g
                for g in SignedPermutation.all(p)
                if g != SignedPermutation.identity(p)
            ]
        )
        logger.debug(
            "Checking ultracyclicity of m_%d over %d permutations", n, len(perms)
        )
        values: dict[Key, Fraction] = pairing_functional(S, n)
        entries: dict[Key, dict[Key, Fraction]] = {}
        failing: dict[Key, SignedPermutation] = {}
        for key in sorted(values):
            degrees: list[int] = [space.degree(i) for i in key]
            for perm in perms:
                sigma: SignedPermutation = perm.inverse().interleave()
                inv: tuple[int, ...] = sigma.inverse().images
                moved: Key = tuple(key[j] for j in inv)
                sign: int = koszul_sign(sigma, degrees)
                defect: Fraction = values.get(moved, Fraction(0)) - sign * values[key]
                if defect:
                    entries[key] = {(): defect}
                    failing[key] = perm
                    break
        defect_map: MultiMap = MultiMap(
            (space,) * (n + 1), (), 2 - n + form.degree, entries
        )
        result: CheckResult = CheckResult.from_defect(f"ultracyclic(p={p})", defect_map)
        if result.witness is not None:
            swapped: SignedPermutation = failing[result.witness.key]
            result.detail = f"fails for pair permutation {swapped!r}"
        report.add(result)
    return report


def validate_sector(pattern: str, length: int) -> str:
    pattern = pattern.upper()
    if len(pattern) != length or set(pattern) - {"A", "D"}:
        raise ValidationError(
            f"Sector pattern {pattern!r} must have {length} letters from A, D"
        )
    return pattern


def stasheff_gamma_defect(
    S: AInfinityData, n: int, sector: Optional[str] = None
) -> MultiMap:
    """
    γ ∘ (SI(n) ⊗ id) as a scalar (n+1)-linear map, restricted to a sector
    pattern such as "AADAD" when given.
    """
    form: BilinearForm = _require_form(S)
    functional: MultiMap = compose(form.table, stasheff_defect(S, n), 0)
    if sector is None:
        return functional
    pattern: str = validate_sector(sector, n + 1)
    return functional.restrict(lambda key: S.pattern(key) == pattern)


def all_sectors(length: int) -> list[str]:
    """Every pattern over {A, D} of the given length, lexicographically."""
    patterns: list[str] = [""]
    for _ in range(length):
        patterns = [p + c for p in patterns for c in "AD"]
    return patterns


def sector_defects(S: AInfinityData, n: int) -> dict[str, MultiMap]:
    """Nonzero sector restrictions of SI(n)_γ, keyed by pattern."""
    functional: MultiMap = stasheff_gamma_defect(S, n)
    result: dict[str, MultiMap] = {}
    for pattern in all_sectors(n + 1):
        piece: MultiMap = functional.restrict(
            lambda key, pattern=pattern: S.pattern(key) == pattern
        )
        if not piece.is_zero():
            result[pattern] = piece
    return result
