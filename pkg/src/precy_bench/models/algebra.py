"""Data models for dg algebras, double brackets and their morphisms."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.utils.exceptions import HomogeneityError, SpaceMismatchError


@dataclass(frozen=True)
class DgAlgebraData:
    """
    A finite dg algebra (A, μ, ∂), not necessarily unital.

    Structural shape is validated on construction; associativity, ∂² = 0
    and Leibniz are checked by `check_dg_algebra`.
    """

    space: GradedSpace
    """Underlying graded space"""

    product: MultiMap
    """μ: A ⊗ A → A of degree 0"""

    differential: MultiMap
    """∂: A → A of degree 1, possibly zero"""

    def __post_init__(self) -> None:
        if self.product.domain != (self.space, self.space) or self.product.codomain != (
            self.space,
        ):
            raise SpaceMismatchError("Product must be a map A ⊗ A → A")
        if self.product.degree != 0 and not self.product.is_zero():
            raise HomogeneityError("Product must have degree 0")
        if self.differential.domain != (self.space,) or self.differential.codomain != (
            self.space,
        ):
            raise SpaceMismatchError("Differential must be a map A → A")
        if self.differential.degree != 1 and not self.differential.is_zero():
            raise HomogeneityError("Differential must have degree 1")

    @classmethod
    def build(
        cls,
        space: GradedSpace,
        product: Optional[MultiMap] = None,
        differential: Optional[MultiMap] = None,
    ) -> "DgAlgebraData":
        """Fill missing structure maps with zero maps of the right shape."""
        return cls(
            space=space,
            product=product or MultiMap.zero((space, space), (space,), 0),
            differential=differential or MultiMap.zero((space,), (space,), 1),
        )

    def mul(self, i: int, j: int) -> dict[Key, Fraction]:
        """Coordinates of e_i · e_j."""
        return self.product.value((i, j))

    def diff(self, i: int) -> dict[Key, Fraction]:
        """Coordinates of ∂e_i."""
        return self.differential.value((i,))

    def with_differential(self, differential: MultiMap) -> "DgAlgebraData":
        return DgAlgebraData(self.space, self.product, differential)

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.space.to_dict(),
            "product": self.product.to_dict(),
            "differential": self.differential.to_dict(),
        }

    def __repr__(self) -> str:
        return (
            f"DgAlgebraData(dim={self.space.dim}, "
            f"products={len(self.product.entries)}, "
            f"differential={len(self.differential.entries)})"
        )


@dataclass(frozen=True)
class DoubleBracket:
    """
    A double bracket of degree -d stored in unshifted form.

    ⟨e_p, e_q⟩ = Σ c e_i ⊗ e_j is the entry (p, q) → {(i, j): c}.
    """

    d: int
    """The bracket has degree -d"""

    table: MultiMap
    """A ⊗ A → A ⊗ A of degree -d"""

    def __post_init__(self) -> None:
        if self.table.arity != 2 or self.table.coarity != 2:
            raise SpaceMismatchError("Double bracket must be a map A ⊗ A → A ⊗ A")
        space: GradedSpace = self.table.domain[0]
        if self.table.domain != (space, space) or self.table.codomain != (space, space):
            raise SpaceMismatchError("Double bracket must live over a single space")
        if self.table.degree != -self.d and not self.table.is_zero():
            raise HomogeneityError(
                f"Bracket table has degree {self.table.degree}, expected {-self.d}"
            )

    @classmethod
    def zero(cls, space: GradedSpace, d: int) -> "DoubleBracket":
        return cls(d, MultiMap.zero((space, space), (space, space), -d))

    @property
    def space(self) -> GradedSpace:
        return self.table.domain[0]

    def value(self, p: int, q: int) -> dict[Key, Fraction]:
        """Coordinates of ⟨e_p, e_q⟩."""
        return self.table.value((p, q))

    def to_dict(self) -> dict[str, Any]:
        return {"d": self.d, "table": self.table.to_dict()}

    def __repr__(self) -> str:
        return f"DoubleBracket(d={self.d}, entries={len(self.table.entries)})"


@dataclass(frozen=True)
class PoissonAlgebra:
    """A dg algebra together with a double bracket over it."""

    algebra: DgAlgebraData
    """Underlying dg algebra"""

    bracket: DoubleBracket
    """Double bracket over the same space"""

    def __post_init__(self) -> None:
        if self.bracket.space != self.algebra.space:
            raise SpaceMismatchError("Bracket is not defined over the algebra's space")

    @property
    def space(self) -> GradedSpace:
        return self.algebra.space

    @property
    def d(self) -> int:
        return self.bracket.d


@dataclass(frozen=True)
class DpaMorphism:
    """A candidate morphism φ: A → B of double Poisson dg algebras."""

    source: PoissonAlgebra
    """(A, ⟨,⟩_A)"""

    target: PoissonAlgebra
    """(B, ⟨,⟩_B)"""

    map: MultiMap
    """φ: A → B of degree 0"""

    def __post_init__(self) -> None:
        if self.map.domain != (self.source.space,) or self.map.codomain != (
            self.target.space,
        ):
            raise SpaceMismatchError("Morphism map must go from source to target")
        if self.map.degree != 0 and not self.map.is_zero():
            raise HomogeneityError("Morphism map must have degree 0")

    def image(self, i: int) -> dict[Key, Fraction]:
        """Coordinates of φ(e_i)."""
        return self.map.value((i,))

    def __repr__(self) -> str:
        return (
            f"DpaMorphism(source_dim={self.source.space.dim}, "
            f"target_dim={self.target.space.dim}, d={self.source.d})"
        )
