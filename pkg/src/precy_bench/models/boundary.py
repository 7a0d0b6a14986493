"""Boundary structures A ⊕ B#[d-1] and their strict legs."""

from dataclasses import dataclass, field
from typing import Any

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.models.ainfty import AInfinityData, MorphismData
from precy_bench.models.algebra import DgAlgebraData
from precy_bench.models.report import AxiomReport
from precy_bench.utils.exceptions import SpaceMismatchError


@dataclass(frozen=True)
class BoundaryAlgebra:
    """
    An A∞-structure on A ⊕ A#[d-1] carrying the natural form.

    The A-part occupies the first dim(A) basis slots, followed by
    t e_i* in the order of A's basis.
    """

    base: DgAlgebraData
    """(A, μ, ∂)"""

    d: int
    """Bracket degree is -d; the dual part is shifted by d - 1"""

    total: AInfinityData
    """The structure on the whole carrier"""

    def __post_init__(self) -> None:
        if self.total.space.dim != 2 * self.base.space.dim:
            raise SpaceMismatchError("Carrier must have twice the dimension of A")
        if self.total.space.basis[: self.base.space.dim] != self.base.space.basis:
            raise SpaceMismatchError("Carrier must start with the basis of A")

    @property
    def space(self) -> GradedSpace:
        return self.total.space

    @property
    def shift(self) -> int:
        return self.d - 1

    @property
    def dim(self) -> int:
        """Dimension of A."""
        return self.base.space.dim

    def dual_index(self, i: int) -> int:
        """Carrier index of t e_i*."""
        return self.dim + i

    def with_total(self, total: AInfinityData) -> "BoundaryAlgebra":
        return BoundaryAlgebra(self.base, self.d, total)

    def to_dict(self) -> dict[str, Any]:
        return {"d": self.d, **self.total.to_dict()}

    def __repr__(self) -> str:
        return (
            f"BoundaryAlgebra(dim_A={self.dim}, d={self.d}, "
            f"arities={sorted(self.total.ops)})"
        )


@dataclass
class MixedBoundary:
    """
    The structure ∂φ on A ⊕ B#[d-1] built from φ: A → B, with its
    possibly degenerate form and the strict legs Φ_A and Φ_B.
    """

    carrier: AInfinityData
    """Structure on A ⊕ B#[d-1], form γ_φ attached"""

    leg_a: MorphismData
    """Φ_A: ∂φ → ∂A, (a, tf) ↦ (a, t(f∘φ))"""

    leg_b: MorphismData
    """Φ_B: ∂φ → ∂B, (a, tf) ↦ (φ(a), tf)"""

    phi: MultiMap
    """φ: A → B"""

    d: int
    """Bracket degree is -d"""

    notes: list[str] = field(default_factory=list)
    """Conventions recorded during construction"""

    def __repr__(self) -> str:
        return (
            f"MixedBoundary(dim={self.carrier.space.dim}, d={self.d}, "
            f"arities={sorted(self.carrier.ops)})"
        )


@dataclass
class CompositionWitness:
    """
    Certificate that ∂φ and ∂ψ compose through ∂(ψ∘φ).

    Holds Υ_φ: ∂υ → ∂φ, Υ_ψ: ∂υ → ∂ψ and the composite legs.
    """

    composite: MixedBoundary
    """∂υ for υ = ψ∘φ"""

    upsilon_phi: MorphismData
    """(a, tf) ↦ (a, t(f∘ψ))"""

    upsilon_psi: MorphismData
    """(a, tf) ↦ (φ(a), tf)"""

    left_leg: MultiMap
    """Φ_A ∘ Υ_φ"""

    right_leg: MultiMap
    """Ψ_B ∘ Υ_ψ"""

    report: AxiomReport
    """Morphism, form and square checks"""

    def __repr__(self) -> str:
        return (
            f"CompositionWitness(passed={self.report.passed}, "
            f"composite={self.composite!r})"
        )
