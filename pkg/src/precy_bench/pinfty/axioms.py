"""Double P∞ axioms: antisymmetry, DLeib∞(p) and DJac∞(p)."""

import logging
from typing import Optional

from precy_bench.graded.maps import (
    MultiMap,
    compose,
    extend_identity,
    permutation_map,
    tensor_maps,
)
from precy_bench.graded.signs import SignedPermutation
from precy_bench.graded.space import GradedSpace
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.validators import validate_ultra_mode

logger = logging.getLogger(__name__)


def conjugate(perm: SignedPermutation, f: MultiMap) -> MultiMap:
    """τ(σ) ∘ f ∘ τ(σ⁻¹) for an endomorphism f of A^⊗p."""
    spaces: tuple[GradedSpace, ...] = f.domain
    inner: MultiMap = compose(f, permutation_map(perm.inverse(), spaces))
    return compose(permutation_map(perm, f.codomain), inner)


def antisymmetry_result(
    P: PInfinityFamily, p: int, mode: str = "generators"
) -> CheckResult:
    """τ(σ)∘⟨…⟩_p∘τ(σ⁻¹) = sgn(σ)⟨…⟩_p over generators or all of S_p."""
    mode = validate_ultra_mode(mode)
    bracket: MultiMap = P.bracket(p)
    perms: list[SignedPermutation] = (
        SignedPermutation.adjacent_generators(p)
        if mode == "generators"
        else [s for s in SignedPermutation.all(p) if s != SignedPermutation.identity(p)]
    )
    name: str = f"antisymmetry(p={p})"
    for perm in perms:
        defect: MultiMap = conjugate(perm, bracket) - bracket.scale(perm.sign())
        if not defect.is_zero():
            return CheckResult.from_defect(name, defect, detail=f"fails for {perm!r}")
    return CheckResult(name=name, passed=True, checked=len(perms))


def leibniz_defect(P: PInfinityFamily, p: int) -> MultiMap:
    """
    ⟨a_1, ..., a_{p-1}, ab⟩_p - ⟨a_1, ..., a_{p-1}, a⟩_p b
    - (-1)^{|a|(p + Σ|a_j|)} a⟨a_1, ..., a_{p-1}, b⟩_p,
    with A acting on the first and last tensor factors.
    """
    space: GradedSpace = P.space
    mu: MultiMap = P.base.product
    bracket: MultiMap = P.bracket(p)
    identity: MultiMap = MultiMap.identity(space)
    lhs: MultiMap = compose(bracket, mu, p - 1)
    right: MultiMap = compose(
        extend_identity(mu, left=[space] * (p - 1)), tensor_maps([bracket, identity])
    )
    # a moves past a_1..a_{p-1}, then ⟨…⟩_p passes a
    front: SignedPermutation = SignedPermutation(tuple(range(1, p)) + (0, p))
    moved: MultiMap = compose(
        tensor_maps([identity, bracket]), permutation_map(front, [space] * (p + 1))
    )
    left: MultiMap = compose(extend_identity(mu, right=[space] * (p - 1)), moved)
    return lhs - right - left


def nested_bracket(P: PInfinityFamily, i: int, p: int) -> MultiMap:
    """⟨…⟩_{i,p-i+1} = (⟨…⟩_i ⊗ id^{p-i}) ∘ (id^{i-1} ⊗ ⟨…⟩_{p-i+1})."""
    space: GradedSpace = P.space
    outer: MultiMap = extend_identity(P.bracket(i), right=[space] * (p - i))
    inner: MultiMap = extend_identity(P.bracket(p - i + 1), left=[space] * (i - 1))
    return compose(outer, inner)


def jacobi_defect(P: PInfinityFamily, p: int) -> MultiMap:
    """Σ_i (-1)^{i(p+1)} Σ_{σ∈C_p} sgn(σ) τ(σ)∘⟨…⟩_{i,p-i+1}∘τ(σ⁻¹)."""
    space: GradedSpace = P.space
    total: MultiMap = MultiMap.zero((space,) * p, (space,) * p, 3 - p)
    cyclic: list[SignedPermutation] = SignedPermutation.cyclic_group(p)
    for i in range(1, p + 1):
        if i not in P.brackets or p - i + 1 not in P.brackets:
            continue
        nested: MultiMap = nested_bracket(P, i, p)
        summed: MultiMap = MultiMap.zero((space,) * p, (space,) * p, 3 - p)
        for perm in cyclic:
            summed = summed + conjugate(perm, nested).scale(perm.sign())
        total = total + summed.scale(-1 if i * (p + 1) % 2 else 1)
    return total


def check_p_infinity(
    P: PInfinityFamily, mode: str = "generators", p_limit: Optional[int] = None
) -> AxiomReport:
    """
    Antisymmetry and DLeib∞(p) for every stored p, DJac∞(p) for
    p ≤ 2·p_max - 1.
    """
    mode = validate_ultra_mode(mode)
    report: AxiomReport = AxiomReport(subject="double P∞ algebra")
    report.notes.append(f"permutation mode: {mode}")
    for p in sorted(P.brackets):
        logger.debug("Checking antisymmetry and DLeib for p=%d", p)
        report.add(antisymmetry_result(P, p, mode))
        report.add(CheckResult.from_defect(f"DLeib(p={p})", leibniz_defect(P, p)))
    limit: int = p_limit if p_limit is not None else max(1, 2 * P.p_max - 1)
    for p in range(1, limit + 1):
        logger.debug("Checking DJac for p=%d", p)
        report.add(CheckResult.from_defect(f"DJac(p={p})", jacobi_defect(P, p)))
    return report
