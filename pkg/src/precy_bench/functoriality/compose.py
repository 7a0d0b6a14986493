"""Composability of mixed boundaries through ∂(ψ∘φ)."""

import logging

from precy_bench.ainfty.morphisms import check_morphism, form_preservation_defect
from precy_bench.functoriality.mixed import boundary_morphism
from precy_bench.functoriality.morphism import (
    forward_pairs,
    identity_pairs,
    pullback_pairs,
    strict_map,
)
from precy_bench.graded.maps import MultiMap, compose
from precy_bench.models.ainfty import MorphismData
from precy_bench.models.algebra import DpaMorphism
from precy_bench.models.boundary import CompositionWitness, MixedBoundary
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)


def compose_boundary(
    phi: DpaMorphism, psi: DpaMorphism, force: bool = False
) -> CompositionWitness:
    """
    Build ∂υ for υ = ψ∘φ with Υ_φ: (a, tf) ↦ (a, t(f∘ψ)) and
    Υ_ψ: (a, tf) ↦ (φ(a), tf), and check Φ_B∘Υ_φ = Ψ_A∘Υ_ψ.

    Raises:
        SpaceMismatchError: If the target of φ is not the source of ψ
        PreconditionError: If either map fails its morphism checks
    """
    if phi.target != psi.source:
        raise SpaceMismatchError(
            "Target of the first map is not the source of the second"
        )
    upsilon: DpaMorphism = DpaMorphism(
        phi.source, psi.target, compose(psi.map, phi.map)
    )
    first: MixedBoundary = boundary_morphism(phi, force=force)
    second: MixedBoundary = boundary_morphism(psi, force=force)
    composite: MixedBoundary = boundary_morphism(upsilon, force=force)

    n_a: int = phi.source.space.dim
    n_b: int = phi.target.space.dim
    n_c: int = psi.target.space.dim
    up_phi: MultiMap = strict_map(
        composite.carrier.space,
        first.carrier.space,
        identity_pairs(n_a) + pullback_pairs(psi.map, n_a, n_a),
    )
    up_psi: MultiMap = strict_map(
        composite.carrier.space,
        second.carrier.space,
        forward_pairs(phi.map) + identity_pairs(n_c, n_a, n_b),
    )
    upsilon_phi: MorphismData = MorphismData.strict(
        composite.carrier, first.carrier, up_phi
    )
    upsilon_psi: MorphismData = MorphismData.strict(
        composite.carrier, second.carrier, up_psi
    )

    report: AxiomReport = AxiomReport(subject="composition of mixed boundaries")
    for name, leg in (("Υ_φ", upsilon_phi), ("Υ_ψ", upsilon_psi)):
        report.extend(check_morphism(leg), prefix=f"{name}:")
        report.add(
            CheckResult.from_defect(
                f"{name}:form_preserved", form_preservation_defect(leg)
            )
        )
    square: MultiMap = compose(first.leg_b.component(1), up_phi) - compose(
        second.leg_a.component(1), up_psi
    )
    report.add(CheckResult.from_defect("square_commutes", square))
    logger.info("Composed mixed boundaries: passed=%s", report.passed)
    return CompositionWitness(
        composite=composite,
        upsilon_phi=upsilon_phi,
        upsilon_psi=upsilon_psi,
        left_leg=compose(first.leg_a.component(1), up_phi),
        right_leg=compose(second.leg_b.component(1), up_psi),
        report=report,
    )
