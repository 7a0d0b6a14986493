"""The mixed boundary ∂φ on A ⊕ B#[d-1] and its legs Φ_A, Φ_B."""

import logging
from collections import defaultdict
from fractions import Fraction

from precy_bench.ainfty.cyclic import check_cyclic, check_ultracyclic
from precy_bench.ainfty.morphisms import check_morphism, form_preservation_defect
from precy_bench.ainfty.stasheff import check_stasheff
from precy_bench.correspondence.boundary import square_zero_extension
from precy_bench.correspondence.bracket import precy_from_bracket
from precy_bench.functoriality.morphism import (
    check_dpa_morphism,
    forward_pairs,
    identity_pairs,
    pullback_pairs,
    strict_map,
)
from precy_bench.graded.maps import MultiMap, compose, tensor_maps
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, MorphismData
from precy_bench.models.algebra import DpaMorphism
from precy_bench.models.boundary import BoundaryAlgebra, MixedBoundary
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import PreconditionError

logger = logging.getLogger(__name__)

FINITENESS_NOTE: str = "B# is finite dimensional, so B is locally finite dimensional"
FORM_DEGREE_NOTE: str = (
    "γ_φ has degree d-1 while the construction is announced as degenerate "
    "d-cyclic; the form degree is taken as d-1"
)


def _mixed_m3(
    phi: MultiMap, boundary_a: BoundaryAlgebra, boundary_b: BoundaryAlgebra
) -> dict[Key, dict[Key, Fraction]]:
    """
    m_3^φ(a, tf, b) = m_3^A(a, t(f∘φ), b) and
    m_3^φ(tf, b, tg) = m_3^B(tf, φ(b), tg).
    """
    n_a: int = boundary_a.dim
    n_b: int = boundary_b.dim
    pulled: defaultdict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    pushed: defaultdict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for (k,), out in phi.entries.items():
        for (r,), c in out.items():
            pulled[k].append((r, c))
            pushed[r].append((k, c))
    entries: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for (a, dual, b), out in boundary_a.total.op(3).entries.items():
        if a >= n_a or b >= n_a or dual < n_a:
            continue
        for r, c in pulled[dual - n_a]:
            for out_key, value in out.items():
                entries[(a, n_a + r, b)][out_key] += c * value
    for (f, l, g), out in boundary_b.total.op(3).entries.items():
        if f < n_b or g < n_b or l >= n_b:
            continue
        for a, c in pushed[l]:
            key: Key = (n_a + f - n_b, a, n_a + g - n_b)
            for (j,), value in out.items():
                entries[key][(n_a + j - n_b,)] += c * value
    return {k: dict(v) for k, v in entries.items()}


def boundary_morphism(phi: DpaMorphism, force: bool = False) -> MixedBoundary:
    """
    Build ∂φ on A ⊕ B#[d-1] with γ_φ(tf, a) = f(φ(a)), its good m_3^φ and
    the strict legs Φ_A, Φ_B.

    Raises:
        PreconditionError: If φ is not a morphism of double Poisson dg
            algebras, unless `force`
    """
    report: AxiomReport = check_dpa_morphism(phi)
    if not report.passed and not force:
        raise PreconditionError("Map is not a double Poisson morphism", report)
    d: int = phi.source.d
    boundary_a: BoundaryAlgebra = precy_from_bracket(
        phi.source.algebra, phi.source.bracket, force=force
    )
    boundary_b: BoundaryAlgebra = precy_from_bracket(
        phi.target.algebra, phi.target.bracket, force=force
    )
    base: AInfinityData = square_zero_extension(
        phi.source.algebra, phi.target.algebra, phi.map, d
    )
    space: GradedSpace = base.space
    m3: MultiMap = MultiMap(
        (space,) * 3, (space,), -1, _mixed_m3(phi.map, boundary_a, boundary_b)
    )
    carrier: AInfinityData = base.with_ops({**base.ops, 3: m3})
    n_a: int = boundary_a.dim
    n_b: int = boundary_b.dim
    to_a: MultiMap = strict_map(
        space,
        boundary_a.space,
        identity_pairs(n_a) + pullback_pairs(phi.map, n_a, n_a),
    )
    to_b: MultiMap = strict_map(
        space,
        boundary_b.space,
        forward_pairs(phi.map) + identity_pairs(n_b, n_a, n_b),
    )
    logger.info("Built ∂φ on %d + %d generators", n_a, n_b)
    return MixedBoundary(
        carrier=carrier,
        leg_a=MorphismData.strict(carrier, boundary_a.total, to_a),
        leg_b=MorphismData.strict(carrier, boundary_b.total, to_b),
        phi=phi.map,
        d=d,
        notes=[FINITENESS_NOTE, FORM_DEGREE_NOTE],
    )


def intertwining_defects(M: MixedBoundary) -> tuple[MultiMap, MultiMap]:
    """
    φ(m_3^A(a, t(f∘φ), b)) - m_3^B(φ(a), tf, φ(b)) on A ⊗ D ⊗ A, and
    m_3^A(t(f∘φ), a, t(g∘φ)) - t(t⁻¹m_3^B(tf, φ(a), tg) ∘ φ) on D ⊗ A ⊗ D.
    """
    target_a: AInfinityData = M.leg_a.target
    target_b: AInfinityData = M.leg_b.target
    n_a: int = target_a.space.dim // 2
    n_b: int = target_b.space.dim // 2
    leg_a: MultiMap = M.leg_a.component(1)
    leg_b: MultiMap = M.leg_b.component(1)
    push: MultiMap = strict_map(target_a.space, target_b.space, forward_pairs(M.phi))
    pull: MultiMap = strict_map(
        target_b.space, target_a.space, pullback_pairs(M.phi, n_b, n_a)
    )
    via_a: MultiMap = compose(target_a.op(3), tensor_maps([leg_a] * 3))
    via_b: MultiMap = compose(target_b.op(3), tensor_maps([leg_b] * 3))
    first: MultiMap = (compose(push, via_a) - via_b).restrict(
        lambda key: M.carrier.pattern(key) == "ADA"
    )
    second: MultiMap = (via_a - compose(pull, via_b)).restrict(
        lambda key: M.carrier.pattern(key) == "DAD"
    )
    return first, second


def check_mixed_boundary(M: MixedBoundary) -> AxiomReport:
    """
    Stasheff and degenerate cyclicity of ∂φ, MI(n) and form preservation for
    both legs, and both intertwining identities.
    """
    report: AxiomReport = AxiomReport(subject="mixed boundary ∂φ")
    report.extend(check_stasheff(M.carrier))
    report.extend(check_cyclic(M.carrier))
    for name, leg in (("Φ_A", M.leg_a), ("Φ_B", M.leg_b)):
        report.extend(check_morphism(leg), prefix=f"{name}:")
        report.add(
            CheckResult.from_defect(
                f"{name}:form_preserved", form_preservation_defect(leg)
            )
        )
    first, second = intertwining_defects(M)
    report.add(CheckResult.from_defect("intertwining(ADA)", first))
    report.add(CheckResult.from_defect("intertwining(DAD)", second))
    ultra: bool = check_ultracyclic(M.carrier).passed
    report.notes.append(f"ultracyclic: {'yes' if ultra else 'no'}")
    report.notes.extend(note for note in M.notes if note not in report.notes)
    return report
