"""Data model for double P∞ families."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.models.algebra import DgAlgebraData, DoubleBracket
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    SpaceMismatchError,
    ValidationError,
)


@dataclass(frozen=True)
class PInfinityFamily:
    """
    A graded algebra with brackets ⟨…⟩_p: A^⊗p → A^⊗p of degree 2 - p.

    The differential is carried by ⟨…⟩_1, so the base algebra has none.
    """

    base: DgAlgebraData
    """Graded algebra with zero differential"""

    brackets: dict[int, MultiMap] = field(default_factory=dict)
    """Arity → bracket"""

    def __post_init__(self) -> None:
        if not self.base.differential.is_zero():
            raise ValidationError(
                "P∞ base must have zero differential; use the arity-1 bracket"
            )
        space: GradedSpace = self.base.space
        kept: dict[int, MultiMap] = {}
        for p, bracket in sorted(self.brackets.items()):
            if p < 1:
                raise DimensionError(f"Bracket arity must be positive, got {p}")
            if bracket.domain != (space,) * p or bracket.codomain != (space,) * p:
                raise SpaceMismatchError(f"⟨…⟩_{p} must be a map A^⊗{p} → A^⊗{p}")
            if bracket.is_zero():
                continue
            if bracket.degree != 2 - p:
                raise HomogeneityError(
                    f"⟨…⟩_{p} has degree {bracket.degree}, expected {2 - p}"
                )
            kept[p] = bracket
        object.__setattr__(self, "brackets", kept)

    @classmethod
    def from_double_poisson(
        cls, algebra: DgAlgebraData, bracket: DoubleBracket
    ) -> "PInfinityFamily":
        """
        The family ⟨…⟩_1 = ∂, ⟨…⟩_2 = ⟨,⟩ of a degree-0 double Poisson
        dg algebra.
        """
        if bracket.d != 0:
            raise ValidationError(
                f"Only d = 0 brackets give P∞ families, got d = {bracket.d}"
            )
        graded: DgAlgebraData = DgAlgebraData.build(algebra.space, algebra.product)
        return cls(graded, {1: algebra.differential, 2: bracket.table})

    @property
    def space(self) -> GradedSpace:
        return self.base.space

    @property
    def p_max(self) -> int:
        return max(self.brackets, default=0)

    def bracket(self, p: int) -> MultiMap:
        """⟨…⟩_p, or the zero map when absent."""
        if p in self.brackets:
            return self.brackets[p]
        return MultiMap.zero((self.space,) * p, (self.space,) * p, 2 - p)

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": self.base.to_dict(),
            "brackets": {str(p): b.to_dict() for p, b in self.brackets.items()},
        }

    def __repr__(self) -> str:
        return f"PInfinityFamily(dim={self.space.dim}, arities={sorted(self.brackets)})"
