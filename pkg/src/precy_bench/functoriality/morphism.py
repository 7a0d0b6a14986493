"""Morphisms of double Poisson dg algebras and strict carrier maps."""

import logging
from collections import defaultdict
from collections.abc import Iterable
from fractions import Fraction

from precy_bench.graded.maps import MultiMap, compose, tensor_maps
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, MorphismData, Part
from precy_bench.models.algebra import DgAlgebraData, DpaMorphism
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)


def check_dpa_morphism(phi: DpaMorphism) -> AxiomReport:
    """
    φ∘μ_A = μ_B∘(φ⊗φ), φ∘∂_A = ∂_B∘φ and (φ⊗φ)∘⟨,⟩_A = ⟨,⟩_B∘(φ⊗φ).

    Raises:
        SpaceMismatchError: If the brackets have different degrees
    """
    if phi.source.d != phi.target.d:
        raise SpaceMismatchError(
            f"Brackets of degree -{phi.source.d} and -{phi.target.d} "
            "cannot be intertwined"
        )
    f: MultiMap = phi.map
    A: DgAlgebraData = phi.source.algebra
    B: DgAlgebraData = phi.target.algebra
    both: MultiMap = tensor_maps([f, f])
    report: AxiomReport = AxiomReport(subject="double Poisson morphism")
    report.add(
        CheckResult.from_defect(
            "product_preserved", compose(f, A.product) - compose(B.product, both)
        )
    )
    report.add(
        CheckResult.from_defect(
            "differential_preserved",
            compose(f, A.differential) - compose(B.differential, f),
        )
    )
    report.add(
        CheckResult.from_defect(
            "bracket_intertwined",
            compose(both, phi.source.bracket.table)
            - compose(phi.target.bracket.table, both),
        )
    )
    logger.debug("Checked morphism %r: passed=%s", phi, report.passed)
    return report


def strict_map(
    source: GradedSpace,
    target: GradedSpace,
    pairs: Iterable[tuple[int, int, Fraction]],
) -> MultiMap:
    """Degree-0 linear map with e_i ↦ Σ c e_j for each (i, j, c)."""
    entries: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for i, j, c in pairs:
        entries[(i,)][(j,)] += c
    return MultiMap((source,), (target,), 0, {k: dict(v) for k, v in entries.items()})


def identity_pairs(
    n: int, offset_in: int = 0, offset_out: int = 0
) -> list[tuple[int, int, Fraction]]:
    return [(offset_in + k, offset_out + k, Fraction(1)) for k in range(n)]


def forward_pairs(
    f: MultiMap, offset_in: int = 0, offset_out: int = 0
) -> list[tuple[int, int, Fraction]]:
    """e_k ↦ f(e_k), shifted into carrier slots."""
    return [
        (offset_in + k, offset_out + r, c)
        for (k,), out in f.entries.items()
        for (r,), c in out.items()
    ]


def pullback_pairs(
    f: MultiMap, offset_in: int = 0, offset_out: int = 0
) -> list[tuple[int, int, Fraction]]:
    """t e_r* ↦ t(e_r* ∘ f) = Σ_k f_{rk} t e_k*, shifted into carrier slots."""
    return [
        (offset_in + r, offset_out + k, c)
        for (k,), out in f.entries.items()
        for (r,), c in out.items()
    ]


def as_structure(A: DgAlgebraData) -> AInfinityData:
    """(A, μ, ∂) as an A∞-structure with m_1 = ∂, m_2 = μ, all in the A-part."""
    return AInfinityData(
        A.space, (Part.A,) * A.space.dim, {1: A.differential, 2: A.product}
    )


def underlying_morphism(phi: DpaMorphism) -> MorphismData:
    """φ as a strict morphism of the underlying dg algebras."""
    return MorphismData.strict(
        as_structure(phi.source.algebra), as_structure(phi.target.algebra), phi.map
    )
